#pragma once

#include "json.hpp"

#include "freyd/homological.hpp"
#include "freyd/linear_system.hpp"

namespace freyd {

using Json = nlohmann::ordered_json;

// Matrix interchange format:
//   {"ring": "Z" | "Q" | {"Zmod": n}, "rows": m, "cols": n,
//    "entries": [[..row..], ...]}
// with entries as decimal strings ("a/b" over Q) to avoid overflow.

Json ring_to_json(const RingId& ring);
RingId ring_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Presentation file: {"ring": ..., "relations": <matrix>}.
Json presentation_to_json(const Obj& module);
Obj presentation_from_json(const Json& j);

// Descriptor envelope: outermost first, e.g. ["FREYD","OP","FREYD","ROWS"].
Json descriptor_to_json(const DescriptorPtr& desc);
DescriptorPtr descriptor_from_json(const Json& j, const RingId& ring);

// Objects and morphisms relative to a known descriptor:
//   ROWS obj  {"rank": n};           FREYD obj {"relation": <mor>};
//   OP obj    {"inner": <obj>};
//   ROWS mor  {"matrix": <matrix>};
//   FREYD mor {"source": <obj>, "target": <obj>, "datum": <mor>}
//             (the witness is recomputed, certifying well-definedness);
//   OP mor    {"inner": <mor>}.
Json obj_to_json(const Obj& o);
Obj obj_from_json(const DescriptorPtr& desc, const Json& j);
Json mor_to_json(const Mor& m);
Mor mor_from_json(const DescriptorPtr& desc, const Json& j);

// Linear system file; absent cells are JSON null.
Json system_to_json(const LinearSystem& sys);
LinearSystem system_from_json(const Json& j);

Json invariants_to_json(const ModuleInvariants& inv);

}  // namespace freyd
