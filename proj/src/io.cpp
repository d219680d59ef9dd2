#include "hdc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hdc {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw std::runtime_error("invalid hex digit in vector data");
}

std::string expect_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("truncated file");
  return line;
}

template <typename T>
T parse_field(std::istringstream& ss, const char* what) {
  T value{};
  if (!(ss >> value)) throw std::runtime_error(std::string("bad field: ") + what);
  return value;
}

}  // namespace

std::string to_hex(const Hypervector& v) {
  const std::size_t nbytes = (v.dim() + 7) / 8;
  const auto words = v.words();
  std::string out;
  out.reserve(nbytes * 2);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const auto byte =
        static_cast<unsigned>((words[b >> 3] >> ((b & 7) * 8)) & 0xff);
    out.push_back(kHexDigits[byte >> 4]);
    out.push_back(kHexDigits[byte & 0xf]);
  }
  return out;
}

Hypervector from_hex(std::size_t dim, const std::string& hex) {
  const std::size_t nbytes = (dim + 7) / 8;
  if (hex.size() != nbytes * 2)
    throw std::runtime_error("vector data has wrong length");
  Hypervector v(dim);
  auto words = v.words();
  for (std::size_t b = 0; b < nbytes; ++b) {
    const auto byte = static_cast<std::uint64_t>(hex_value(hex[2 * b]) * 16 +
                                                 hex_value(hex[2 * b + 1]));
    words[b >> 3] |= byte << ((b & 7) * 8);
  }
  v.mask_tail();
  return v;
}

void save_codebook(const ItemMemory& mem, std::ostream& out) {
  out << "hdc-codebook 1\n";
  out << "dim " << mem.dim() << "\n";
  out << "tiebreak " << mem.tie_break_seed() << "\n";
  out << "entries " << mem.size() << "\n";
  for (std::size_t i = 0; i < mem.size(); ++i)
    out << mem.name(i) << " " << to_hex(mem.vector(i)) << "\n";
}

ItemMemory load_codebook(std::istream& in) {
  if (expect_line(in) != "hdc-codebook 1")
    throw std::runtime_error("not a codebook file (bad magic line)");
  std::size_t dim = 0, entries = 0;
  std::uint64_t tiebreak = 0;
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "dim") throw std::runtime_error("expected dim line");
    dim = parse_field<std::size_t>(ss, "dim");
  }
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "tiebreak") throw std::runtime_error("expected tiebreak line");
    tiebreak = parse_field<std::uint64_t>(ss, "tiebreak");
  }
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "entries") throw std::runtime_error("expected entries line");
    entries = parse_field<std::size_t>(ss, "entries");
  }
  ItemMemory mem(dim, tiebreak);
  for (std::size_t i = 0; i < entries; ++i) {
    std::istringstream ss(expect_line(in));
    std::string name, hex;
    if (!(ss >> name >> hex)) throw std::runtime_error("bad entry line");
    mem.add(std::move(name), from_hex(dim, hex));
  }
  return mem;
}

void save_codebook_file(const ItemMemory& mem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  save_codebook(mem, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

ItemMemory load_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return load_codebook(in);
}

void save_hetero(const HeteroMemory& mem, std::ostream& out) {
  out << "hdc-heteromem 1\n";
  out << "dim " << mem.dim() << "\n";
  out << "rows " << mem.rows() << "\n";
  out << "fields " << mem.field_names().size();
  for (const auto& f : mem.field_names()) out << " " << f;
  out << "\n";
  for (std::size_t r = 0; r < mem.rows(); ++r) {
    out << r << " " << to_hex(mem.address(r));
    for (const auto& v : mem.content(r)) out << " " << v;
    out << "\n";
  }
}

HeteroMemory load_hetero(std::istream& in) {
  if (expect_line(in) != "hdc-heteromem 1")
    throw std::runtime_error("not a hetero memory file (bad magic line)");
  std::size_t dim = 0, rows = 0, nfields = 0;
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "dim") throw std::runtime_error("expected dim line");
    dim = parse_field<std::size_t>(ss, "dim");
  }
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "rows") throw std::runtime_error("expected rows line");
    rows = parse_field<std::size_t>(ss, "rows");
  }
  std::vector<std::string> fields;
  {
    std::istringstream ss(expect_line(in));
    std::string key;
    ss >> key;
    if (key != "fields") throw std::runtime_error("expected fields line");
    nfields = parse_field<std::size_t>(ss, "fields");
    for (std::size_t i = 0; i < nfields; ++i)
      fields.push_back(parse_field<std::string>(ss, "field name"));
  }
  HeteroMemory mem(dim, std::move(fields));
  for (std::size_t r = 0; r < rows; ++r) {
    std::istringstream ss(expect_line(in));
    const auto row = parse_field<std::size_t>(ss, "row index");
    if (row != r) throw std::runtime_error("row indices out of order");
    const auto hex = parse_field<std::string>(ss, "address");
    HeteroMemory::Payload payload;
    for (std::size_t i = 0; i < nfields; ++i)
      payload.push_back(parse_field<std::string>(ss, "payload field"));
    mem.add_row(from_hex(dim, hex), std::move(payload));
  }
  return mem;
}

}  // namespace hdc
