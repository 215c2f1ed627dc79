#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace evgraph::csv {

// RFC 4180 record reader: quoted fields, doubled quotes, embedded newlines,
// CRLF or LF line endings.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  // `line` receives the 1-based physical line the record starts on.
  bool next(std::vector<std::string>& fields, std::size_t& line);

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

void write_field(std::ostream& out, std::string_view field);

}  // namespace evgraph::csv
