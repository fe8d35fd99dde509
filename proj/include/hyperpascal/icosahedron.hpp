#ifndef hyperpascal_icosahedron_hpp
#define hyperpascal_icosahedron_hpp

#include <array>
#include <cstdint>
#include <vector>

namespace hyperpascal {

// Combinatorics of the vertex figure. Every vertex of the cube honeycomb
// sees its twelve nearest neighbours as an icosahedron; boundary vertices of
// the pyramid see an induced fragment of it. All link templates below are
// sub-complexes of one canonical icosahedron so that pentagons, fans and
// faces can be read off a single rotation system.
namespace icosa {

inline constexpr int kVertexCount = 12;

// Oriented rotation system: neighbours of each vertex in cyclic order,
// consistently oriented across the solid (verified in the test suite: every
// traced face orbit is a triangle).
inline constexpr std::array<std::array<int8_t, 5>, 12> kRotation = {{
    {1, 2, 3, 4, 5},    // 0
    {2, 0, 5, 6, 7},    // 1
    {0, 1, 7, 8, 3},    // 2
    {0, 2, 8, 9, 4},    // 3
    {0, 3, 9, 10, 5},   // 4
    {0, 4, 10, 6, 1},   // 5
    {1, 5, 10, 11, 7},  // 6
    {1, 6, 11, 8, 2},   // 7
    {2, 7, 11, 9, 3},   // 8
    {3, 8, 11, 10, 4},  // 9
    {4, 9, 11, 6, 5},   // 10
    {6, 10, 9, 8, 7},   // 11
}};

bool adjacent(int u, int v);

// Common neighbours of an edge (u, v): the third corners of the two faces
// through it.
std::array<int8_t, 2> edge_face_thirds(int u, int v);

}  // namespace icosa

enum class VertexType : uint8_t { Apex, One, A, B, C, D, E };

const char* vertex_type_name(VertexType t);  // "apex", "1", "A".."E"

// Role a link position plays for the next level.
enum class SlotKind : uint8_t {
    None,     // absent or parent position
    FaceA,    // boundary slot shared with a neighbour, becomes type A
    FaceB,    // boundary slot owned outright, becomes type B
    FaceOne,  // lateral-edge continuation, becomes the next winger
    IntC,     // interior, three incoming edges
    IntD,     // interior, two incoming edges
    IntE,     // interior, one incoming edge
};

// Link of one vertex type embedded in the canonical icosahedron: which
// positions exist, where the parents sit, what each child slot becomes, and
// which child pairs lie on a common square through the vertex (these pairs
// share one child on the next level).
struct LinkTemplate {
    VertexType type;
    uint16_t present_mask = 0;
    std::vector<int8_t> parent_positions;
    std::array<SlotKind, 12> slot_kind{};
    std::vector<std::pair<int8_t, int8_t>> child_link;
    // Pentagon (or boundary fan) around each present position, restricted to
    // present positions, in rotation order. Fans are rotated to start after
    // the absent gap.
    std::array<std::vector<int8_t>, 12> arc;

    bool present(int p) const { return (present_mask >> p) & 1; }
    bool is_parent_position(int p) const;
    bool is_child_slot(int p) const { return present(p) && !is_parent_position(p); }
    int out_degree() const;
};

const LinkTemplate& link_template(VertexType t);

}  // namespace hyperpascal

#endif
