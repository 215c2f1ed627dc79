#include "csv.hpp"

#include <istream>
#include <ostream>

#include "evgraph/error.hpp"

namespace evgraph::csv {

bool Reader::next(std::vector<std::string>& fields, std::size_t& line) {
  fields.clear();
  line = line_;
  if (in_.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false;
  bool after_quote = false;
  for (;;) {
    const int c = in_.get();
    if (c == std::char_traits<char>::eof()) {
      if (quoted) throw RowError(line, "unterminated quoted field");
      fields.push_back(std::move(field));
      return true;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line_;
        field.push_back(ch);
      }
      continue;
    }
    switch (ch) {
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        after_quote = false;
        break;
      case '\r':
        if (in_.peek() == '\n') in_.get();
        [[fallthrough]];
      case '\n':
        ++line_;
        fields.push_back(std::move(field));
        return true;
      case '"':
        if (!field.empty() || after_quote) throw RowError(line_, "stray quote inside field");
        quoted = true;
        break;
      default:
        if (after_quote) throw RowError(line_, "characters after closing quote");
        field.push_back(ch);
    }
  }
}

void write_field(std::ostream& out, std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    out << field;
    return;
  }
  out << '"';
  for (char c : field) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace evgraph::csv
