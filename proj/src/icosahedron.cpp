#include "hyperpascal/icosahedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpascal {

namespace icosa {

bool adjacent(int u, int v) {
    if (u == v) return false;
    for (int8_t w : kRotation[static_cast<size_t>(u)]) {
        if (w == v) return true;
    }
    return false;
}

std::array<int8_t, 2> edge_face_thirds(int u, int v) {
    if (!adjacent(u, v)) throw std::invalid_argument("edge_face_thirds: not an edge");
    std::array<int8_t, 2> out{-1, -1};
    int found = 0;
    for (int w = 0; w < kVertexCount; ++w) {
        if (w == u || w == v) continue;
        if (adjacent(w, u) && adjacent(w, v)) out[static_cast<size_t>(found++)] = static_cast<int8_t>(w);
    }
    if (found != 2) throw std::logic_error("edge_face_thirds: expected exactly two faces per edge");
    return out;
}

}  // namespace icosa

const char* vertex_type_name(VertexType t) {
    switch (t) {
        case VertexType::Apex: return "apex";
        case VertexType::One: return "1";
        case VertexType::A: return "A";
        case VertexType::B: return "B";
        case VertexType::C: return "C";
        case VertexType::D: return "D";
        case VertexType::E: return "E";
    }
    return "?";
}

bool LinkTemplate::is_parent_position(int p) const {
    return std::find(parent_positions.begin(), parent_positions.end(), static_cast<int8_t>(p)) !=
           parent_positions.end();
}

int LinkTemplate::out_degree() const {
    int n = 0;
    for (int p = 0; p < icosa::kVertexCount; ++p) {
        if (is_child_slot(p)) ++n;
    }
    return n;
}

namespace {

using icosa::kRotation;
using icosa::kVertexCount;

uint16_t mask_of(std::initializer_list<int> positions) {
    uint16_t m = 0;
    for (int p : positions) m = static_cast<uint16_t>(m | (1u << p));
    return m;
}

// Pentagon around p restricted to present positions. For boundary fragments
// the present neighbours must be contiguous in the rotation; the fan is
// rotated so it starts just after the gap.
std::vector<int8_t> restricted_arc(uint16_t present_mask, int p) {
    const auto& pent = kRotation[static_cast<size_t>(p)];
    auto present = [&](int8_t v) { return (present_mask >> v) & 1; };
    int count = 0;
    for (int8_t v : pent) {
        if (present(v)) ++count;
    }
    std::vector<int8_t> arc;
    arc.reserve(static_cast<size_t>(count));
    if (count == 5) {
        arc.assign(pent.begin(), pent.end());
        return arc;
    }
    // find a start index whose predecessor is absent
    int start = -1;
    for (int i = 0; i < 5; ++i) {
        if (present(pent[static_cast<size_t>(i)]) && !present(pent[static_cast<size_t>((i + 4) % 5)])) {
            start = i;
            break;
        }
    }
    if (start < 0) {
        if (count != 0) throw std::logic_error("restricted_arc: no gap found");
        return arc;
    }
    for (int k = 0; k < 5; ++k) {
        int8_t v = pent[static_cast<size_t>((start + k) % 5)];
        if (present(v)) {
            arc.push_back(v);
        } else {
            break;  // contiguity checked below
        }
    }
    if (static_cast<int>(arc.size()) != count) {
        throw std::logic_error("restricted_arc: present neighbours are not contiguous");
    }
    return arc;
}

LinkTemplate make_template(VertexType type, uint16_t present, std::vector<int8_t> parents,
                           std::array<SlotKind, 12> kinds) {
    LinkTemplate t;
    t.type = type;
    t.present_mask = present;
    t.parent_positions = std::move(parents);
    t.slot_kind = kinds;
    for (int u = 0; u < kVertexCount; ++u) {
        if (!t.present(u)) continue;
        t.arc[static_cast<size_t>(u)] = restricted_arc(present, u);
        for (int v = u + 1; v < kVertexCount; ++v) {
            if (t.present(v) && icosa::adjacent(u, v) && t.is_child_slot(u) && t.is_child_slot(v)) {
                t.child_link.emplace_back(static_cast<int8_t>(u), static_cast<int8_t>(v));
            }
        }
    }
    return t;
}

std::array<SlotKind, 12> interior_kinds(const std::vector<int8_t>& parents, uint16_t present) {
    std::array<SlotKind, 12> kinds{};
    kinds.fill(SlotKind::None);
    for (int p = 0; p < kVertexCount; ++p) {
        if (!((present >> p) & 1)) continue;
        if (std::find(parents.begin(), parents.end(), static_cast<int8_t>(p)) != parents.end()) continue;
        int adj = 0;
        for (int8_t q : parents) {
            if (icosa::adjacent(p, q)) ++adj;
        }
        kinds[static_cast<size_t>(p)] = adj == 2 ? SlotKind::IntC : adj == 1 ? SlotKind::IntD : SlotKind::IntE;
    }
    return kinds;
}

std::array<SlotKind, 12> explicit_kinds(std::initializer_list<std::pair<int, SlotKind>> entries) {
    std::array<SlotKind, 12> kinds{};
    kinds.fill(SlotKind::None);
    for (auto [p, k] : entries) kinds[static_cast<size_t>(p)] = k;
    return kinds;
}

struct TemplateSet {
    LinkTemplate apex, one, a, b, c, d, e;

    TemplateSet() {
        uint16_t all = 0x0fff;
        // Interior links are the whole icosahedron; the slot a child occupies
        // is classified by how many parent positions it touches (two shared
        // squares give a C, one a D, none an E).
        c = make_template(VertexType::C, all, {0, 1, 2}, interior_kinds({0, 1, 2}, all));
        d = make_template(VertexType::D, all, {0, 1}, interior_kinds({0, 1}, all));
        e = make_template(VertexType::E, all, {0}, interior_kinds({0}, all));

        // Boundary links are a hub plus its pentagon (face vertices) or a
        // four-vertex fragment (lateral edge). Position 0 is the hub: the
        // single edge pointing into the interior.
        uint16_t cone = mask_of({0, 1, 2, 3, 4, 5});
        a = make_template(VertexType::A, cone, {1, 5},
                          explicit_kinds({{0, SlotKind::IntC},
                                          {2, SlotKind::FaceA},
                                          {3, SlotKind::FaceB},
                                          {4, SlotKind::FaceA}}));
        b = make_template(VertexType::B, cone, {1},
                          explicit_kinds({{0, SlotKind::IntD},
                                          {2, SlotKind::FaceA},
                                          {3, SlotKind::FaceB},
                                          {4, SlotKind::FaceB},
                                          {5, SlotKind::FaceA}}));
        one = make_template(VertexType::One, mask_of({0, 1, 2, 3}), {1},
                            explicit_kinds({{0, SlotKind::FaceA},
                                            {2, SlotKind::FaceA},
                                            {3, SlotKind::FaceOne}}));
        apex = make_template(VertexType::Apex, mask_of({0, 1, 2}), {},
                             explicit_kinds({{0, SlotKind::FaceOne},
                                             {1, SlotKind::FaceOne},
                                             {2, SlotKind::FaceOne}}));
    }
};

}  // namespace

const LinkTemplate& link_template(VertexType t) {
    static const TemplateSet set;
    switch (t) {
        case VertexType::Apex: return set.apex;
        case VertexType::One: return set.one;
        case VertexType::A: return set.a;
        case VertexType::B: return set.b;
        case VertexType::C: return set.c;
        case VertexType::D: return set.d;
        case VertexType::E: return set.e;
    }
    throw std::logic_error("link_template: unknown vertex type");
}

}  // namespace hyperpascal
