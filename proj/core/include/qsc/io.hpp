#pragma once

#include "qsc/complex_matrix.hpp"
#include "qsc/kernel_l2.hpp"
#include "qsc/wigner.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qsc {

// Anything wrong with input data (not with the math) is a ParseError; the
// command line maps it to its own exit code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One complex number in either "a+bi" or "(a,b)" form; plain reals and bare
// imaginary parts like "-i" or "2.5i" also work.
cplx parse_complex_token(const std::string& token);
std::string format_complex(cplx v);

// Matrix text format: a "dim N" header line, then N*N whitespace-separated
// complex tokens in row-major order.  Lines starting with '#' are skipped.
ComplexMatrix parse_matrix_text(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_text(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

// Kernel text format: "kernel N X_MIN X_MAX" header, then N*N tokens, the
// samples of A(x, y) on the uniform closed grid.
KernelOperator parse_kernel_text(std::istream& in);
KernelOperator read_kernel_file(const std::string& path);
void write_kernel_text(std::ostream& out, const KernelOperator& a);
void write_kernel_file(const std::string& path, const KernelOperator& a);

// Phase-space binary format: magic "WGF1", then little-endian
// f64 q_min, q_max, p_min, p_max, hbar; u32 n_q, n_p; and n_q * n_p f64
// samples, row-major with p fastest.
WignerGrid parse_wigner_stream(std::istream& in);
WignerGrid read_wigner_file(const std::string& path);
void write_wigner_stream(std::ostream& out, const WignerGrid& w);
void write_wigner_file(const std::string& path, const WignerGrid& w);

} // namespace qsc
