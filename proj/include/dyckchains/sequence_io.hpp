#ifndef DYCKCHAINS_SEQUENCE_IO_HPP
#define DYCKCHAINS_SEQUENCE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace dyck {

enum class OutputFormat { plain, csv, bfile, dot };

std::optional<OutputFormat> parse_format(std::string_view name);
std::string format_name(OutputFormat format);

// plain: "a0,a1,..."; csv: "n,<column>" header then rows; bfile: "n a(n)" lines.
void write_sequence(std::ostream& out, const std::vector<mpz_class>& values, OutputFormat format,
                    const std::string& column = "a(n)");

// Reads an OEIS b-file. Comment lines (#) and blank lines are skipped; indices must
// be consecutive from the first one. Throws std::invalid_argument otherwise.
struct BFile {
    long offset = 0;
    std::vector<mpz_class> values;
};
BFile read_bfile(std::istream& in);

// Comma-separated integers, as emitted by the plain format.
std::vector<mpz_class> parse_plain_sequence(std::string_view text);

} // namespace dyck

#endif
