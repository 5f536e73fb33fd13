#pragma once

#include "hbtensor/hbgraph.hpp"
#include "hbtensor/tensor.hpp"
#include "hbtensor/transform.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace hbtensor::io {

// JSON documents are exchanged as text so the public headers stay free of a
// JSON library. Output is deterministic: two-space indent, stable ordering.

/// {"universe": [...], "mult": {"id": m, ...}}; non-integral values as "p/q".
std::string mset_to_json(const Multiset& a);
Multiset mset_from_json(std::string_view text);

/// {"vertices": [...], "edges": [{"mult": {...}, "weight": w?}, ...]}
std::string hbgraph_to_json(const HbGraph& h);
/// Throws Error(Parse) with a line/column or field path in the message.
HbGraph hbgraph_from_json(std::string_view text);

/// {"approach", "r_h", "vertices", "null_vertices", "layer_coeffs", "edge_provenance"}
std::string trace_to_json(const UniformisationTrace& trace);
UniformisationTrace trace_from_json(std::string_view text);

/// Header "# order=r dim=d entries=k", then "i1 ... ir  p/q" per entry with
/// 1-based ascending indices.
void write_coo(std::ostream& os, const SymTensor& t, CooMode mode = CooMode::canonical,
               std::uint64_t dense_limit = kDefaultDenseLimit);
/// Reads canonical or full COO; permuted duplicates must agree.
SymTensor read_coo(std::istream& is);

/// {"order", "dim", "entries": [{"idx": [...], "val": "p/q"}, ...]}
std::string tensor_to_json(const SymTensor& t);
SymTensor tensor_from_json(std::string_view text);

/// Vertex rows, edge columns, header row "vertex,e1,...,ep".
std::string incidence_to_csv(const HbGraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace hbtensor::io
