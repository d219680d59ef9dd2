#pragma once

#include <iosfwd>
#include <string>

#include "hdc/item_memory.hpp"

namespace hdc {

// Codebook file format, text with a self-describing header:
//
//   hdc-codebook 1
//   dim <N>
//   tiebreak <seed>
//   entries <count>
//   <name> <hex>          (one line per entry)
//
// Hex encodes the packed bits, two lowercase digits per byte, byte 0 first;
// component 0 is the least-significant bit of byte 0, bit 1 = +1.
void save_codebook(const ItemMemory& mem, std::ostream& out);
ItemMemory load_codebook(std::istream& in);

void save_codebook_file(const ItemMemory& mem, const std::string& path);
ItemMemory load_codebook_file(const std::string& path);

// Hetero memory format: same header idea, addresses plus a delimited payload
// table (row index, then one value per declared field):
//
//   hdc-heteromem 1
//   dim <N>
//   rows <count>
//   fields <k> <name_1> ... <name_k>
//   <row> <hex> <value_1> ... <value_k>
void save_hetero(const HeteroMemory& mem, std::ostream& out);
HeteroMemory load_hetero(std::istream& in);

std::string to_hex(const Hypervector& v);
Hypervector from_hex(std::size_t dim, const std::string& hex);

}  // namespace hdc
