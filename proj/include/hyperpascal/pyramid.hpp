#ifndef hyperpascal_pyramid_hpp
#define hyperpascal_pyramid_hpp

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperpascal/counts.hpp"
#include "hyperpascal/icosahedron.hpp"
#include "hyperpascal/rational.hpp"
#include "hyperpascal/triangle.hpp"

namespace hyperpascal {

// Raised when the growth step detects an inconsistency: a merge class of
// impossible size, a class mixing boundary and interior slots, or frame
// anchors that contradict each other.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Permanent per-level record: everything census, audit and export need.
struct LevelData {
    std::vector<VertexType> type;
    std::vector<uint8_t> face_mask;  // bit per pyramid face, 0 for interior
    std::vector<uint32_t> parent_begin;
    std::vector<uint32_t> parents;      // ordinals on the previous level, ascending
    std::vector<int8_t> parent_slots;   // slot this vertex occupies in each parent's link
    std::vector<Int> value;

    size_t size() const { return type.size(); }
    size_t parent_count(uint32_t v) const { return parent_begin[v + 1] - parent_begin[v]; }
};

// The layered digraph of the {4,3,5} pyramid, grown one level at a time.
//
// Growth works square by square: every vertex instantiates one provisional
// child per link slot; every square of the mosaic whose bottom corner sits
// two levels up closes over the top and merges two provisionals. Merge
// classes become the new vertices, and the frames (slot correspondences
// across each parent-child edge) are rebuilt from the recorded merge events
// so the next level can repeat the procedure. Link and frame state is kept
// only for the two most recent levels.
class PyramidGraph {
public:
    struct Options {
        unsigned max_levels = 10;
        bool allow_beyond_cap = false;
    };

    PyramidGraph() : PyramidGraph(Options{}) {}
    explicit PyramidGraph(Options options);

    unsigned top_level() const { return static_cast<unsigned>(levels_.size()) - 1; }
    void grow();
    void grow_to(unsigned level);

    const LevelData& level(unsigned n) const;

    // Exact census and value sums of one built level.
    std::pair<CountVector, SumVector> census(unsigned n) const;

    // The face-restricted subgraph row, in row order, for comparison against
    // the {4,5} triangle. face in {0,1,2}.
    TriangleRow face_row(int face, unsigned n) const;

    std::string vertex_id(unsigned level, uint32_t ordinal) const;

private:
    friend struct PyramidTestAccess;

    struct Event {
        uint32_t z;       // bottom corner of the creating square, two levels up
        int8_t p, q;      // the child-link edge of z that drove the union
        uint32_t va, vb;  // z's children at p and q (the new vertex's parents)
        int8_t sa, sb;    // the new vertex's slot in va's and vb's links
    };

    // Transient growth state for one level.
    struct LevelState {
        std::vector<std::array<int32_t, 12>> child_at;  // slot -> child ordinal on the next level
        std::vector<int8_t> frames;  // vertex*144 + slot*12 + input position -> output slot, -1 unset
        bool frames_built = false;
        bool transient_dropped = false;
        std::vector<uint32_t> event_begin;  // CSR over this level's vertices
        std::vector<Event> events;
    };

    void build_frames(unsigned parent_level);
    int8_t frame_at(unsigned parent_level, uint32_t v, int slot, int input_pos) const;
    void drop_transient(unsigned level);

    Options options_;
    std::vector<LevelData> levels_;
    std::vector<LevelState> state_;
};

// Classical (Euclidean) pyramid oracle: level n of the trinomial triangle by
// dynamic programming, rows i = 0..n. Level sums are 3^n and the level size
// is (n+1)(n+2)/2.
std::vector<std::vector<Int>> euclidean_level_values(unsigned n);
Int euclidean_level_sum(unsigned n);

}  // namespace hyperpascal

#endif
