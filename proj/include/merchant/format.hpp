#ifndef MERCHANT_FORMAT_HPP
#define MERCHANT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace merchant::io {

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 quoting (fields with comma, quote, CR or LF are quoted, quotes
/// doubled), '\n' line endings, trailing newline after every record.
std::string write_csv(const CsvTable& table);

/// Inverse of write_csv. The first record becomes the header.
CsvTable parse_csv(std::string_view text);

/// Plain pipe table; cells are emitted verbatim.
std::string write_markdown(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

}  // namespace merchant::io

#endif  // MERCHANT_FORMAT_HPP
