#include "qsc/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace qsc {

namespace {

// tokens with '#' comments stripped, in order
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string t;
        while (ls >> t) tokens.push_back(t);
    }
    return tokens;
}

double parse_real(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw ParseError("bad number '" + s + "'");
    return v;
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::size_t parse_dim(const std::string& s, const char* what) {
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || v < 1 || v > 100000)
        throw ParseError(std::string("bad ") + what + " '" + s + "'");
    return static_cast<std::size_t>(v);
}

void put_u32_le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32_le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw ParseError("truncated phase-space file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ostream& out, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    if constexpr (std::endian::native == std::endian::big) {
        u = ((u & 0x00000000000000ffULL) << 56) | ((u & 0x000000000000ff00ULL) << 40) |
            ((u & 0x0000000000ff0000ULL) << 24) | ((u & 0x00000000ff000000ULL) << 8) |
            ((u & 0x000000ff00000000ULL) >> 8) | ((u & 0x0000ff0000000000ULL) >> 24) |
            ((u & 0x00ff000000000000ULL) >> 40) | ((u & 0xff00000000000000ULL) >> 56);
    }
    out.write(reinterpret_cast<const char*>(&u), 8);
}

double get_f64_le(std::istream& in) {
    std::uint64_t u;
    in.read(reinterpret_cast<char*>(&u), 8);
    if (!in) throw ParseError("truncated phase-space file");
    if constexpr (std::endian::native == std::endian::big) {
        u = ((u & 0x00000000000000ffULL) << 56) | ((u & 0x000000000000ff00ULL) << 40) |
            ((u & 0x0000000000ff0000ULL) << 24) | ((u & 0x00000000ff000000ULL) << 8) |
            ((u & 0x000000ff00000000ULL) >> 8) | ((u & 0x0000ff0000000000ULL) >> 24) |
            ((u & 0x00ff000000000000ULL) >> 40) | ((u & 0xff00000000000000ULL) >> 56);
    }
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

} // namespace

cplx parse_complex_token(const std::string& token) {
    if (token.empty()) throw ParseError("empty complex token");

    if (token.front() == '(') {
        if (token.back() != ')') throw ParseError("unbalanced '(' in '" + token + "'");
        const std::string body = token.substr(1, token.size() - 2);
        const std::size_t comma = body.find(',');
        if (comma == std::string::npos) throw ParseError("missing ',' in '" + token + "'");
        return cplx(parse_real(body.substr(0, comma)), parse_real(body.substr(comma + 1)));
    }

    if (token.back() == 'i' || token.back() == 'I') {
        const std::string body = token.substr(0, token.size() - 1);
        // split point: the last sign that is neither leading nor part of an exponent
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') &&
                body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        std::string re = "0", im = body;
        if (split != std::string::npos) {
            re = body.substr(0, split);
            im = body.substr(split);
        }
        if (im.empty() || im == "+") im = "1";
        else if (im == "-") im = "-1";
        return cplx(split == std::string::npos && re == "0" ? 0.0 : parse_real(re),
                    parse_real(im));
    }

    return cplx(parse_real(token), 0.0);
}

std::string format_complex(cplx v) {
    const std::string re = format_real(v.real());
    std::string im = format_real(v.imag());
    if (!im.empty() && im[0] != '-') im.insert(im.begin(), '+');
    return re + im + "i";
}

ComplexMatrix parse_matrix_text(std::istream& in) {
    const std::vector<std::string> t = tokenize(in);
    if (t.size() < 2 || t[0] != "dim")
        throw ParseError("matrix file must start with 'dim N'");
    const std::size_t n = parse_dim(t[1], "dimension");
    if (t.size() != 2 + n * n)
        throw ParseError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(t.size() - 2));
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = parse_complex_token(t[2 + i * n + j]);
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix_text(in);
}

void write_matrix_text(std::ostream& out, const ComplexMatrix& m) {
    out << "dim " << m.dim() << "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            out << (j ? " " : "") << format_complex(m(i, j));
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_matrix_text(out, m);
}

KernelOperator parse_kernel_text(std::istream& in) {
    const std::vector<std::string> t = tokenize(in);
    if (t.size() < 4 || t[0] != "kernel")
        throw ParseError("kernel file must start with 'kernel N X_MIN X_MAX'");
    KernelGrid g;
    g.n = parse_dim(t[1], "grid size");
    g.x_min = parse_real(t[2]);
    g.x_max = parse_real(t[3]);
    if (g.n < 2) throw ParseError("kernel grid needs at least 2 points");
    if (!(g.x_max > g.x_min)) throw ParseError("empty kernel domain");
    if (t.size() != 4 + g.n * g.n)
        throw ParseError("expected " + std::to_string(g.n * g.n) + " entries, got " +
                         std::to_string(t.size() - 4));
    KernelOperator a(g);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            a(i, j) = parse_complex_token(t[4 + i * g.n + j]);
    return a;
}

KernelOperator read_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_kernel_text(in);
}

void write_kernel_text(std::ostream& out, const KernelOperator& a) {
    const KernelGrid& g = a.grid();
    out << "kernel " << g.n << " " << format_real(g.x_min) << " " << format_real(g.x_max)
        << "\n";
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j)
            out << (j ? " " : "") << format_complex(a(i, j));
        out << "\n";
    }
}

void write_kernel_file(const std::string& path, const KernelOperator& a) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_kernel_text(out, a);
}

WignerGrid parse_wigner_stream(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "WGF1", 4) != 0)
        throw ParseError("not a WGF1 phase-space file");

    WignerGrid w;
    w.q_min = get_f64_le(in);
    w.q_max = get_f64_le(in);
    w.p_min = get_f64_le(in);
    w.p_max = get_f64_le(in);
    w.hbar = get_f64_le(in);
    w.n_q = get_u32_le(in);
    w.n_p = get_u32_le(in);
    if (!(w.q_max > w.q_min) || !(w.p_max > w.p_min))
        throw ParseError("empty phase-space box");
    if (w.hbar <= 0.0 || !std::isfinite(w.hbar)) throw ParseError("bad hbar");
    if (w.n_q < 2 || w.n_p < 2 || w.n_q > (1u << 20) || w.n_p > (1u << 20))
        throw ParseError("unreasonable grid size");

    w.values.resize(w.n_q * w.n_p);
    for (double& v : w.values) v = get_f64_le(in);
    // nothing may trail the payload
    char extra;
    if (in.read(&extra, 1)) throw ParseError("trailing bytes after phase-space data");
    return w;
}

WignerGrid read_wigner_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_wigner_stream(in);
}

void write_wigner_stream(std::ostream& out, const WignerGrid& w) {
    out.write("WGF1", 4);
    put_f64_le(out, w.q_min);
    put_f64_le(out, w.q_max);
    put_f64_le(out, w.p_min);
    put_f64_le(out, w.p_max);
    put_f64_le(out, w.hbar);
    put_u32_le(out, static_cast<std::uint32_t>(w.n_q));
    put_u32_le(out, static_cast<std::uint32_t>(w.n_p));
    for (double v : w.values) put_f64_le(out, v);
}

void write_wigner_file(const std::string& path, const WignerGrid& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_wigner_stream(out, w);
    if (!out) throw ParseError("short write to '" + path + "'");
}

} // namespace qsc
