#include "hyperpascal/pyramid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hyperpascal {

namespace {

using icosa::edge_face_thirds;
using icosa::kRotation;

struct UnionFind {
    explicit UnionFind(size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0u); }

    uint32_t find(uint32_t x) {
        uint32_t root = x;
        while (parent[root] != root) root = parent[root];
        while (parent[x] != root) {
            uint32_t next = parent[x];
            parent[x] = root;
            x = next;
        }
        return root;
    }

    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }

    std::vector<uint32_t> parent;
    std::vector<uint32_t> size;
};

int popcount8(uint8_t v) {
    int n = 0;
    while (v) {
        n += v & 1;
        v >>= 1;
    }
    return n;
}

bool is_interior_kind(SlotKind k) { return k == SlotKind::IntC || k == SlotKind::IntD || k == SlotKind::IntE; }
bool is_face_kind(SlotKind k) { return k == SlotKind::FaceA || k == SlotKind::FaceB || k == SlotKind::FaceOne; }

std::string describe_members(const std::vector<std::pair<uint32_t, int8_t>>& members) {
    std::ostringstream out;
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out << ", ";
        out << members[i].first << "@" << int(members[i].second);
    }
    return out.str();
}

// One frame: the orientation-compatible bijection between the pentagon (or
// boundary fan) around the child's slot in the parent's link and the one
// around the parent's position in the child's link. Anchor constraints pin
// the alignment; where none exist the completion is conventional, which is
// sound because the slot structure is preserved by the link stabilizer.
struct FrameContext {
    unsigned parent_level;
    uint32_t parent;
    uint32_t child;

    std::string str() const {
        return "edge " + std::to_string(parent_level) + ":" + std::to_string(parent) + " -> " +
               std::to_string(parent_level + 1) + ":" + std::to_string(child);
    }
};

std::array<int8_t, 12> solve_frame(const std::vector<int8_t>& in_arc, const std::vector<int8_t>& out_arc,
                                   const std::vector<std::pair<int8_t, int8_t>>& constraints,
                                   const std::vector<std::pair<int, uint32_t>>& occupant_keys,
                                   const FrameContext& context) {
    size_t n = in_arc.size();
    if (n != out_arc.size()) {
        throw StructuralError("frame arc size mismatch at " + context.str());
    }
    std::vector<std::array<int8_t, 12>> candidates;
    auto add_candidate = [&](auto&& slot_for) {
        std::array<int8_t, 12> m;
        m.fill(-1);
        for (size_t k = 0; k < n; ++k) m[static_cast<size_t>(in_arc[k])] = slot_for(k);
        candidates.push_back(m);
    };
    if (n == 5) {
        for (int dir : {1, -1}) {
            for (int off = 0; off < 5; ++off) {
                add_candidate([&](size_t k) { return out_arc[static_cast<size_t>(((off + dir * static_cast<int>(k)) % 5 + 5) % 5)]; });
            }
        }
    } else {
        add_candidate([&](size_t k) { return out_arc[k]; });
        add_candidate([&](size_t k) { return out_arc[n - 1 - k]; });
    }
    std::vector<std::array<int8_t, 12>> viable;
    for (const auto& m : candidates) {
        bool ok = true;
        for (auto [in, out] : constraints) {
            if (m[static_cast<size_t>(in)] != out) {
                ok = false;
                break;
            }
        }
        if (ok) viable.push_back(m);
    }
    if (viable.empty()) {
        throw StructuralError("frame anchor contradiction at " + context.str());
    }
    if (viable.size() == 1) return viable.front();
    if (!constraints.empty()) {
        throw StructuralError("underdetermined frame despite anchors at " + context.str());
    }
    if (n == 5) {
        // free gauge: rotate so the smallest occupant meets the smallest
        // slot, then complete in reversed cyclic order
        if (occupant_keys.size() != 5) {
            throw StructuralError("gauge requires occupant keys at " + context.str());
        }
        size_t start = 0;
        for (size_t k = 1; k < 5; ++k) {
            if (occupant_keys[k] < occupant_keys[start]) start = k;
        }
        size_t out_min = 0;
        for (size_t k = 1; k < 5; ++k) {
            if (out_arc[k] < out_arc[out_min]) out_min = k;
        }
        std::array<int8_t, 12> m;
        m.fill(-1);
        for (size_t k = 0; k < 5; ++k) {
            int8_t in = in_arc[(start + k) % 5];
            int8_t out = out_arc[static_cast<size_t>(((static_cast<int>(out_min) - static_cast<int>(k)) % 5 + 5) % 5)];
            m[static_cast<size_t>(in)] = out;
        }
        return m;
    }
    // boundary fan with no anchors: reversed completion
    std::array<int8_t, 12> m;
    m.fill(-1);
    for (size_t k = 0; k < n; ++k) m[static_cast<size_t>(in_arc[k])] = out_arc[n - 1 - k];
    return m;
}

}  // namespace

PyramidGraph::PyramidGraph(Options options) : options_(options) {
    LevelData apex;
    apex.type = {VertexType::Apex};
    apex.face_mask = {0b111};
    apex.parent_begin = {0, 0};
    apex.value.emplace_back(1);
    levels_.push_back(std::move(apex));
    state_.emplace_back();
}

const LevelData& PyramidGraph::level(unsigned n) const {
    if (n >= levels_.size()) {
        throw std::out_of_range("level " + std::to_string(n) + " not built (top is " +
                                std::to_string(levels_.size() - 1) + ")");
    }
    return levels_[n];
}

std::string PyramidGraph::vertex_id(unsigned level, uint32_t ordinal) const {
    return std::to_string(level) + ":" + std::to_string(ordinal);
}

void PyramidGraph::grow_to(unsigned level) {
    while (top_level() < level) grow();
}

int8_t PyramidGraph::frame_at(unsigned parent_level, uint32_t v, int slot, int input_pos) const {
    const LevelState& st = state_[parent_level];
    int8_t out = st.frames[static_cast<size_t>(v) * 144 + static_cast<size_t>(slot) * 12 +
                           static_cast<size_t>(input_pos)];
    if (out < 0) {
        throw StructuralError("missing frame entry at level " + std::to_string(parent_level) + " vertex " +
                              std::to_string(v) + " slot " + std::to_string(slot) + " input " +
                              std::to_string(input_pos));
    }
    return out;
}

void PyramidGraph::drop_transient(unsigned level) {
    LevelState& st = state_[level];
    st.child_at = {};
    st.frames = {};
    st.event_begin = {};
    st.events = {};
    st.transient_dropped = true;
}

void PyramidGraph::grow() {
    const unsigned top = top_level();
    if (top + 1 > options_.max_levels && !options_.allow_beyond_cap) {
        throw std::invalid_argument("level cap " + std::to_string(options_.max_levels) +
                                    " reached; growing further must be requested explicitly");
    }
    if (top >= 1) build_frames(top - 1);

    const LevelData& topd = levels_[top];
    const size_t prov_count = topd.size() * 12;
    UnionFind uf(prov_count);

    std::vector<Event> raw;
    if (top >= 1) {
        const LevelData& below = levels_[top - 1];
        const LevelState& below_state = state_[top - 1];
        for (uint32_t w = 0; w < below.size(); ++w) {
            const LinkTemplate& tw = link_template(below.type[w]);
            for (auto [p, q] : tw.child_link) {
                int32_t u = below_state.child_at[w][static_cast<size_t>(p)];
                int32_t u2 = below_state.child_at[w][static_cast<size_t>(q)];
                if (u < 0 || u2 < 0) {
                    throw StructuralError("missing child during merge at level " + std::to_string(top - 1) +
                                          " vertex " + std::to_string(w));
                }
                int8_t su = frame_at(top - 1, w, p, q);
                int8_t sv = frame_at(top - 1, w, q, p);
                uf.unite(static_cast<uint32_t>(u) * 12 + static_cast<uint32_t>(su),
                         static_cast<uint32_t>(u2) * 12 + static_cast<uint32_t>(sv));
                raw.push_back(
                    {w, p, q, static_cast<uint32_t>(u), static_cast<uint32_t>(u2), su, sv});
            }
        }
    }

    // merge classes in first-seen order over ascending (owner, slot)
    std::vector<int32_t> class_of_root(prov_count, -1);
    std::vector<std::vector<std::pair<uint32_t, int8_t>>> members;
    for (uint32_t v = 0; v < topd.size(); ++v) {
        const LinkTemplate& tv = link_template(topd.type[v]);
        for (int slot = 0; slot < 12; ++slot) {
            if (!tv.is_child_slot(slot)) continue;
            uint32_t root = uf.find(v * 12 + static_cast<uint32_t>(slot));
            int32_t& cls = class_of_root[root];
            if (cls < 0) {
                cls = static_cast<int32_t>(members.size());
                members.emplace_back();
            }
            members[static_cast<size_t>(cls)].emplace_back(v, static_cast<int8_t>(slot));
        }
    }

    LevelData next;
    LevelState next_state;
    const size_t count = members.size();
    next.type.resize(count);
    next.face_mask.resize(count);
    next.parent_begin.assign(1, 0);
    next.value.reserve(count);
    next_state.child_at.assign(topd.size(), [] {
        std::array<int32_t, 12> a;
        a.fill(-1);
        return a;
    }());

    for (size_t k = 0; k < count; ++k) {
        const auto& cls = members[k];
        if (cls.size() > 3) {
            throw StructuralError("merge class of size " + std::to_string(cls.size()) + " at level " +
                                  std::to_string(top + 1) + " {" + describe_members(cls) + "}");
        }
        bool any_face = false, any_interior = false;
        for (auto [owner, slot] : cls) {
            SlotKind kind = link_template(topd.type[owner]).slot_kind[static_cast<size_t>(slot)];
            any_face |= is_face_kind(kind);
            any_interior |= is_interior_kind(kind);
        }
        if (any_face && any_interior) {
            throw StructuralError("merge class mixes boundary and interior slots at level " +
                                  std::to_string(top + 1) + " {" + describe_members(cls) + "}");
        }
        auto kind_of = [&](size_t i) {
            return link_template(topd.type[cls[i].first]).slot_kind[static_cast<size_t>(cls[i].second)];
        };
        VertexType type;
        if (any_face) {
            if (cls.size() == 1 && kind_of(0) == SlotKind::FaceB) {
                type = VertexType::B;
            } else if (cls.size() == 1 && kind_of(0) == SlotKind::FaceOne) {
                type = VertexType::One;
            } else if (cls.size() == 2 && kind_of(0) == SlotKind::FaceA && kind_of(1) == SlotKind::FaceA) {
                type = VertexType::A;
            } else {
                throw StructuralError("inconsistent boundary merge class at level " + std::to_string(top + 1) +
                                      " {" + describe_members(cls) + "}");
            }
        } else {
            SlotKind expect = cls.size() == 3 ? SlotKind::IntC : cls.size() == 2 ? SlotKind::IntD : SlotKind::IntE;
            for (size_t i = 0; i < cls.size(); ++i) {
                if (kind_of(i) != expect) {
                    throw StructuralError("interior merge class size " + std::to_string(cls.size()) +
                                          " disagrees with slot roles at level " + std::to_string(top + 1) + " {" +
                                          describe_members(cls) + "}");
                }
            }
            type = cls.size() == 3 ? VertexType::C : cls.size() == 2 ? VertexType::D : VertexType::E;
        }
        next.type[k] = type;

        Int value(0);
        uint8_t mask = 0b111;
        for (size_t i = 0; i < cls.size(); ++i) {
            auto [owner, slot] = cls[i];
            if (i > 0 && owner == cls[i - 1].first) {
                throw StructuralError("merge class with repeated owner at level " + std::to_string(top + 1) + " {" +
                                      describe_members(cls) + "}");
            }
            next.parents.push_back(owner);
            next.parent_slots.push_back(slot);
            next_state.child_at[owner][static_cast<size_t>(slot)] = static_cast<int32_t>(k);
            value += topd.value[owner];
            mask = static_cast<uint8_t>(mask & topd.face_mask[owner]);
        }
        next.parent_begin.push_back(static_cast<uint32_t>(next.parents.size()));
        next.value.push_back(std::move(value));

        switch (type) {
            case VertexType::A:
            case VertexType::B:
                if (popcount8(mask) != 1) {
                    throw StructuralError("boundary vertex without a unique face at level " +
                                          std::to_string(top + 1) + " {" + describe_members(cls) + "}");
                }
                next.face_mask[k] = mask;
                break;
            case VertexType::One:
                if (topd.type[cls[0].first] == VertexType::Apex) {
                    // the three lateral edges fix the face numbering
                    switch (cls[0].second) {
                        case 0: next.face_mask[k] = 0b011; break;
                        case 1: next.face_mask[k] = 0b101; break;
                        default: next.face_mask[k] = 0b110; break;
                    }
                } else {
                    next.face_mask[k] = mask;  // winger line keeps its face pair
                }
                break;
            default:
                next.face_mask[k] = 0;
                break;
        }
    }

    // attach the creating squares to the new vertices for frame building
    std::vector<uint32_t> counts(count + 1, 0);
    std::vector<int32_t> event_class(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        uint32_t root = uf.find(raw[i].va * 12 + static_cast<uint32_t>(raw[i].sa));
        int32_t cls = class_of_root[root];
        event_class[i] = cls;
        ++counts[static_cast<size_t>(cls) + 1];
    }
    for (size_t k = 0; k < count; ++k) counts[k + 1] += counts[k];
    next_state.event_begin = counts;
    next_state.events.resize(raw.size());
    std::vector<uint32_t> cursor(next_state.event_begin.begin(), next_state.event_begin.end() - 1);
    for (size_t i = 0; i < raw.size(); ++i) {
        next_state.events[cursor[static_cast<size_t>(event_class[i])]++] = raw[i];
    }

    levels_.push_back(std::move(next));
    state_[top].child_at = std::move(next_state.child_at);
    LevelState fresh;
    fresh.event_begin = std::move(next_state.event_begin);
    fresh.events = std::move(next_state.events);
    state_.push_back(std::move(fresh));
    if (top >= 2) drop_transient(top - 2);
}

void PyramidGraph::build_frames(unsigned parent_level) {
    LevelState& st = state_[parent_level];
    if (st.frames_built) return;
    if (st.transient_dropped) {
        throw std::logic_error("frame state for level " + std::to_string(parent_level) + " already dropped");
    }
    const LevelData& pd = levels_[parent_level];
    const LevelData& cd = levels_[parent_level + 1];
    const LevelState& cst = state_[parent_level + 1];
    st.frames.assign(pd.size() * 144, -1);

    std::vector<uint32_t> parent_of;
    std::vector<int8_t> slot_of;
    for (uint32_t u = 0; u < cd.size(); ++u) {
        const LinkTemplate& tu = link_template(cd.type[u]);
        const size_t pb = cd.parent_begin[u], pe = cd.parent_begin[u + 1];
        const size_t npar = pe - pb;
        if (npar != tu.parent_positions.size()) {
            throw StructuralError("vertex " + std::to_string(parent_level + 1) + ":" + std::to_string(u) +
                                  " has " + std::to_string(npar) + " parents, expected " +
                                  std::to_string(tu.parent_positions.size()));
        }
        parent_of.assign(cd.parents.begin() + pb, cd.parents.begin() + pe);
        slot_of.assign(cd.parent_slots.begin() + pb, cd.parent_slots.begin() + pe);

        std::array<std::vector<std::pair<int8_t, int8_t>>, 3> constraints;
        auto parent_index = [&](uint32_t ordinal) {
            for (size_t j = 0; j < npar; ++j) {
                if (parent_of[j] == ordinal) return j;
            }
            throw StructuralError("event parent not found for vertex " + std::to_string(parent_level + 1) + ":" +
                                  std::to_string(u));
        };
        // position of grandparent z in the link of parent v (both known)
        auto grandparent_position = [&](uint32_t v, uint32_t z) -> int8_t {
            const LinkTemplate& tv = link_template(pd.type[v]);
            for (size_t j = pd.parent_begin[v]; j < pd.parent_begin[v + 1]; ++j) {
                if (pd.parents[j] == z) {
                    return tv.parent_positions[j - pd.parent_begin[v]];
                }
            }
            throw StructuralError("creating square bottom is not a grandparent at vertex " +
                                  std::to_string(parent_level + 1) + ":" + std::to_string(u));
        };

        for (size_t ei = cst.event_begin[u]; ei < cst.event_begin[u + 1]; ++ei) {
            const Event& e = cst.events[ei];
            size_t a = parent_index(e.va);
            size_t b = parent_index(e.vb);
            if (slot_of[a] != e.sa || slot_of[b] != e.sb) {
                throw StructuralError("recorded merge slots disagree with parent slots at vertex " +
                                      std::to_string(parent_level + 1) + ":" + std::to_string(u));
            }
            int8_t pos_a = tu.parent_positions[a];
            int8_t pos_b = tu.parent_positions[b];
            constraints[a].emplace_back(grandparent_position(e.va, e.z), pos_b);
            constraints[b].emplace_back(grandparent_position(e.vb, e.z), pos_a);

            // flanking cubes of the creating square: third corners of the
            // two faces through the edge, seen from the bottom vertex z and
            // from the new vertex; parent-side cubes must pair up, the
            // child-side assignment is gauge and fixed by ascending order
            const LinkTemplate& tz = link_template(levels_[parent_level - 1].type[e.z]);
            auto z_thirds = edge_face_thirds(e.p, e.q);
            auto u_thirds = edge_face_thirds(pos_a, pos_b);
            std::vector<int8_t> z_par, z_chi, u_par, u_chi;
            for (int8_t w : z_thirds) {
                if (!tz.present(w)) continue;
                (tz.is_parent_position(w) ? z_par : z_chi).push_back(w);
            }
            for (int8_t t : u_thirds) {
                if (!tu.present(t)) continue;
                (tu.is_parent_position(t) ? u_par : u_chi).push_back(t);
            }
            if (z_par.size() != u_par.size() || z_chi.size() != u_chi.size()) {
                throw StructuralError("flanking cube mismatch at vertex " + std::to_string(parent_level + 1) + ":" +
                                      std::to_string(u));
            }
            std::sort(z_par.begin(), z_par.end());
            std::sort(u_par.begin(), u_par.end());
            std::sort(z_chi.begin(), z_chi.end());
            std::sort(u_chi.begin(), u_chi.end());
            auto add_cube_anchor = [&](int8_t w, int8_t t) {
                constraints[a].emplace_back(frame_at(parent_level - 1, e.z, e.p, w), t);
                constraints[b].emplace_back(frame_at(parent_level - 1, e.z, e.q, w), t);
            };
            for (size_t i = 0; i < z_par.size(); ++i) add_cube_anchor(z_par[i], u_par[i]);
            for (size_t i = 0; i < z_chi.size(); ++i) add_cube_anchor(z_chi[i], u_chi[i]);
        }

        for (size_t j = 0; j < npar; ++j) {
            uint32_t v = parent_of[j];
            int8_t s = slot_of[j];
            const LinkTemplate& tv = link_template(pd.type[v]);
            const std::vector<int8_t>& in_arc = tv.arc[static_cast<size_t>(s)];
            const std::vector<int8_t>& out_arc = tu.arc[static_cast<size_t>(tu.parent_positions[j])];
            std::vector<std::pair<int, uint32_t>> occupant_keys;
            if (constraints[j].empty() && in_arc.size() == 5) {
                occupant_keys.reserve(5);
                for (int8_t pos : in_arc) {
                    if (tv.is_parent_position(pos)) {
                        size_t idx = 0;
                        while (tv.parent_positions[idx] != pos) ++idx;
                        occupant_keys.emplace_back(0, pd.parents[pd.parent_begin[v] + idx]);
                    } else {
                        int32_t child = st.child_at[v][static_cast<size_t>(pos)];
                        if (child < 0) {
                            throw StructuralError("missing occupant for gauge at level " +
                                                  std::to_string(parent_level) + " vertex " + std::to_string(v));
                        }
                        occupant_keys.emplace_back(1, static_cast<uint32_t>(child));
                    }
                }
            }
            auto map = solve_frame(in_arc, out_arc, constraints[j], occupant_keys, {parent_level, v, u});
            for (int in = 0; in < 12; ++in) {
                st.frames[static_cast<size_t>(v) * 144 + static_cast<size_t>(s) * 12 + static_cast<size_t>(in)] =
                    map[static_cast<size_t>(in)];
            }
        }
    }
    st.frames_built = true;
}

std::pair<CountVector, SumVector> PyramidGraph::census(unsigned n) const {
    const LevelData& d = level(n);
    CountVector cv;
    SumVector sv;
    cv.n = n;
    sv.n = n;
    cv.a = cv.b = cv.c = cv.d = cv.e = cv.ones = 0;
    sv.a = sv.b = sv.c = sv.d = sv.e = sv.ones = 0;
    for (uint32_t v = 0; v < d.size(); ++v) {
        const Int& value = d.value[v];
        switch (d.type[v]) {
            case VertexType::Apex:
            case VertexType::One:
                cv.ones += 1;
                sv.ones += value;
                break;
            case VertexType::A: cv.a += 1; sv.a += value; break;
            case VertexType::B: cv.b += 1; sv.b += value; break;
            case VertexType::C: cv.c += 1; sv.c += value; break;
            case VertexType::D: cv.d += 1; sv.d += value; break;
            case VertexType::E: cv.e += 1; sv.e += value; break;
        }
    }
    cv.s = cv.a + cv.b + cv.c + cv.d + cv.e + cv.ones;
    sv.s = sv.a + sv.b + sv.c + sv.d + sv.e + sv.ones;
    return {cv, sv};
}

TriangleRow PyramidGraph::face_row(int face, unsigned n) const {
    if (face < 0 || face > 2) throw std::invalid_argument("face_row: face must be 0, 1 or 2");
    const LevelData& d = level(n);
    TriangleRow row;
    row.n = n;
    row.q = 5;
    if (n == 0) {
        row.kinds = {CellKind::Winger};
        row.values = {Int(1)};
        return row;
    }
    const uint8_t bit = static_cast<uint8_t>(1u << face);
    std::vector<uint32_t> verts;
    for (uint32_t v = 0; v < d.size(); ++v) {
        if (d.face_mask[v] & bit) verts.push_back(v);
    }
    // row neighbours share a square: a common parent whose child-link pairs
    // their slots
    std::map<uint32_t, std::vector<std::pair<uint32_t, int8_t>>> by_parent;
    for (uint32_t v : verts) {
        for (size_t j = d.parent_begin[v]; j < d.parent_begin[v + 1]; ++j) {
            by_parent[d.parents[j]].emplace_back(v, d.parent_slots[j]);
        }
    }
    const LevelData& below = level(n - 1);
    std::map<uint32_t, std::vector<uint32_t>> adjacency;
    for (const auto& [w, kids] : by_parent) {
        const LinkTemplate& tw = link_template(below.type[w]);
        for (size_t i = 0; i < kids.size(); ++i) {
            for (size_t j = i + 1; j < kids.size(); ++j) {
                int8_t s1 = std::min(kids[i].second, kids[j].second);
                int8_t s2 = std::max(kids[i].second, kids[j].second);
                bool linked = false;
                for (auto [p, q] : tw.child_link) {
                    if (p == s1 && q == s2) {
                        linked = true;
                        break;
                    }
                }
                if (linked) {
                    adjacency[kids[i].first].push_back(kids[j].first);
                    adjacency[kids[j].first].push_back(kids[i].first);
                }
            }
        }
    }
    // the row is a path whose endpoints are the two wingers
    uint32_t start = UINT32_MAX;
    for (uint32_t v : verts) {
        if (d.type[v] == VertexType::One && (start == UINT32_MAX || v < start)) start = v;
    }
    if (start == UINT32_MAX) throw StructuralError("face row without wingers at level " + std::to_string(n));
    std::vector<uint32_t> order;
    order.reserve(verts.size());
    uint32_t prev = UINT32_MAX, cur = start;
    while (order.size() <= verts.size()) {
        order.push_back(cur);
        const auto it = adjacency.find(cur);
        if (it == adjacency.end()) break;
        uint32_t next = UINT32_MAX;
        for (uint32_t cand : it->second) {
            if (cand != prev) next = cand;
        }
        if (next == UINT32_MAX) break;
        prev = cur;
        cur = next;
    }
    if (order.size() != verts.size()) {
        throw StructuralError("face row is not a path at level " + std::to_string(n) + " (walked " +
                              std::to_string(order.size()) + " of " + std::to_string(verts.size()) + ")");
    }
    for (uint32_t v : order) {
        switch (d.type[v]) {
            case VertexType::One: row.kinds.push_back(CellKind::Winger); break;
            case VertexType::A: row.kinds.push_back(CellKind::A); break;
            case VertexType::B: row.kinds.push_back(CellKind::B); break;
            default:
                throw StructuralError("interior vertex tagged with a face at level " + std::to_string(n));
        }
        row.values.push_back(d.value[v]);
    }
    return row;
}

std::vector<std::vector<Int>> euclidean_level_values(unsigned n) {
    std::vector<std::vector<Int>> level{{Int(1)}};
    for (unsigned step = 0; step < n; ++step) {
        unsigned sz = static_cast<unsigned>(level.size());
        std::vector<std::vector<Int>> next(sz + 1);
        for (unsigned i = 0; i <= sz; ++i) {
            next[i].assign(i + 1, Int(0));
            for (unsigned j = 0; j <= i; ++j) {
                if (i < sz && j < level[i].size()) next[i][j] += level[i][j];
                if (i >= 1 && j < level[i - 1].size()) next[i][j] += level[i - 1][j];
                if (i >= 1 && j >= 1 && j - 1 < level[i - 1].size()) next[i][j] += level[i - 1][j - 1];
            }
        }
        level = std::move(next);
    }
    return level;
}

Int euclidean_level_sum(unsigned n) {
    Int total(0);
    for (const auto& row : euclidean_level_values(n)) {
        for (const auto& v : row) total += v;
    }
    return total;
}

}  // namespace hyperpascal
