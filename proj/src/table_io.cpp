#include "lns/table_io.hpp"

#include <fstream>
#include <sstream>

namespace lns {

namespace {

bool canonical_decimal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return true;
}

Int parse_decimal(const std::string& s, const char* what) {
    if (!canonical_decimal(s))
        throw TableFormatError(std::string("table: ") + what + ": not a canonical decimal: '" +
                               s + "'");
    return Int(s);
}

// Consumes one newline-terminated line; rejects a missing final newline,
// carriage returns and trailing whitespace.
std::string next_line(std::istream& is, const char* what) {
    std::string line;
    if (!std::getline(is, line))
        throw TableFormatError(std::string("table: unexpected end of file, expected ") + what);
    if (!line.empty() && line.back() == '\r')
        throw TableFormatError("table: carriage return found; lines must end with plain newline");
    if (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
        throw TableFormatError("table: trailing whitespace");
    return line;
}

Int parse_field(const std::string& line, const char* prefix, const char* what) {
    std::string pfx(prefix);
    if (line.compare(0, pfx.size(), pfx) != 0)
        throw TableFormatError(std::string("table: expected line '") + prefix + "<decimal>', got '" +
                               line + "'");
    return parse_decimal(line.substr(pfx.size()), what);
}

}  // namespace

void write_table(const SumTable& table, std::ostream& os) {
    os << "LNS1\n";
    os << "P=" << table.base.p << "\n";
    os << "Q=" << table.base.q << "\n";
    os << "SEZ=" << table.sez << "\n";
    for (std::size_t z = 0; z < table.st.size(); ++z)
        os << z << " " << table.st[z] << "\n";
}

SumTable read_table(std::istream& is) {
    // Slurp so the trailing-newline requirement is checkable.
    std::ostringstream buf;
    buf << is.rdbuf();
    std::string text = buf.str();
    if (text.empty() || text.back() != '\n')
        throw TableFormatError("table: file must end with a newline");

    std::istringstream in(text);
    if (next_line(in, "magic") != "LNS1")
        throw TableFormatError("table: missing LNS1 magic line");
    Int p = parse_field(next_line(in, "P"), "P=", "P");
    Int q = parse_field(next_line(in, "Q"), "Q=", "Q");
    Int sez = parse_field(next_line(in, "SEZ"), "SEZ=", "SEZ");

    if (q < 1 || p <= q)
        throw TableFormatError("table: base " + p.get_str() + "/" + q.get_str() +
                               " is not greater than 1");
    if (!sez.fits_ulong_p())
        throw TableFormatError("table: SEZ too large to materialize");
    unsigned long n = sez.get_ui();

    SumTable t{Base(p, q), sez, {}};
    t.st.reserve(n + 1);
    for (unsigned long z = 0; z <= n; ++z) {
        std::string line = next_line(in, "table entry");
        std::size_t space = line.find(' ');
        if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos)
            throw TableFormatError("table: entry line must be '<z> <st>': '" + line + "'");
        Int zi = parse_decimal(line.substr(0, space), "entry index");
        if (zi != Int(static_cast<unsigned long>(z)))
            throw TableFormatError("table: entry indices must ascend from 0; expected " +
                                   std::to_string(z) + ", got " + zi.get_str());
        t.st.push_back(parse_decimal(line.substr(space + 1), "entry value"));
    }
    std::string rest;
    if (std::getline(in, rest))
        throw TableFormatError("table: trailing content after last entry");

    AxiomReport report = verify_axioms(t);
    if (!report.all_pass())
        throw AxiomError("table: loaded table failed verification\n" + report.summary());
    return t;
}

void write_table_file(const SumTable& table, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_table(table, os);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path);
}

SumTable read_table_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_table(is);
}

}  // namespace lns
