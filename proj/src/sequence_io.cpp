#include <dyckchains/sequence_io.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dyck {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "plain") {
        return OutputFormat::plain;
    }
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "bfile") {
        return OutputFormat::bfile;
    }
    if (name == "dot") {
        return OutputFormat::dot;
    }
    return std::nullopt;
}

std::string format_name(OutputFormat format) {
    switch (format) {
    case OutputFormat::plain:
        return "plain";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::bfile:
        return "bfile";
    case OutputFormat::dot:
        return "dot";
    }
    return "plain";
}

void write_sequence(std::ostream& out, const std::vector<mpz_class>& values, OutputFormat format,
                    const std::string& column) {
    switch (format) {
    case OutputFormat::plain:
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << (i ? "," : "") << values[i].get_str();
        }
        out << '\n';
        break;
    case OutputFormat::csv:
        out << "n," << column << '\n';
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << i << ',' << values[i].get_str() << '\n';
        }
        break;
    case OutputFormat::bfile:
        for (std::size_t i = 0; i < values.size(); ++i) {
            out << i << ' ' << values[i].get_str() << '\n';
        }
        break;
    case OutputFormat::dot:
        throw std::invalid_argument("dot output applies only to lattice export");
    }
}

BFile read_bfile(std::istream& in) {
    BFile result;
    std::string line;
    bool first = true;
    long expected = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        std::string extra;
        if (!(fields >> index >> value) || (fields >> extra)) {
            throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": expected \"n a(n)\"");
        }
        if (first) {
            result.offset = expected = index;
            first = false;
        }
        if (index != expected) {
            throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": index " +
                                        std::to_string(index) + " out of sequence");
        }
        mpz_class v;
        if (v.set_str(value, 10) != 0) {
            throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": bad integer '" + value + "'");
        }
        result.values.push_back(v);
        ++expected;
    }
    return result;
}

std::vector<mpz_class> parse_plain_sequence(std::string_view text) {
    std::vector<mpz_class> out;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        const auto b = token.find_first_not_of(" \t\r\n");
        const auto e = token.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) {
            throw std::invalid_argument("empty sequence term");
        }
        mpz_class v;
        if (v.set_str(token.substr(b, e - b + 1), 10) != 0) {
            throw std::invalid_argument("bad sequence term '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

} // namespace dyck
