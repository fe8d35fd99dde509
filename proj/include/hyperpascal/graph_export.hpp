#ifndef hyperpascal_graph_export_hpp
#define hyperpascal_graph_export_hpp

#include <iosfwd>

#include "hyperpascal/pyramid.hpp"

namespace hyperpascal {

// Deterministic emission, vertices in ordinal order, values as decimal
// strings (they outgrow 64 bits quickly).

// { "level": n, "vertices": [ { "id": "n:k", "type": "...",
//   "parents": ["n-1:j", ...], "value": "..." } ] }
void write_level_json(std::ostream& out, const PyramidGraph& graph, unsigned n);

// One vertex object per line, same record shape as the JSON vertices array.
void write_level_ndjson(std::ostream& out, const PyramidGraph& graph, unsigned n);

// Header id,type,parent_ids,value; parent ids joined with ';'.
void write_level_csv(std::ostream& out, const PyramidGraph& graph, unsigned n, bool header = true);

// Bipartite slab between levels n and n+1 as a DOT digraph, nodes labelled
// "type:value".
void write_slab_dot(std::ostream& out, const PyramidGraph& graph, unsigned n);

}  // namespace hyperpascal

#endif
