#include "entmom/matrix_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "entmom/errors.hpp"

namespace entmom {

namespace {

std::string format_entry(Complex v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", v.real(), v.imag());
    return buf;
}

Complex parse_entry(const std::string& tok) {
    if (tok.empty() || tok.back() != 'j')
        throw MatrixFormatError("matrix entry '" + tok + "' does not end in 'j'");
    // split at the sign of the imaginary part: the last '+'/'-' that is not
    // an exponent sign and not the leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = tok.size() - 1; i > 0; --i) {
        const char c = tok[i];
        if ((c == '+' || c == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        throw MatrixFormatError("matrix entry '" + tok + "' lacks an imaginary part");
    try {
        std::size_t used = 0;
        const double re = std::stod(tok.substr(0, split), &used);
        if (used != split)
            throw MatrixFormatError("bad real part in '" + tok + "'");
        const std::string imtok = tok.substr(split, tok.size() - split - 1);
        const double im = std::stod(imtok, &used);
        if (used != imtok.size())
            throw MatrixFormatError("bad imaginary part in '" + tok + "'");
        return {re, im};
    } catch (const std::logic_error&) {
        throw MatrixFormatError("cannot parse matrix entry '" + tok + "'");
    }
}

}  // namespace

void write_matrix(std::ostream& os, const ComplexMatrix& m, const Dims& dims) {
    os << "dims";
    for (std::size_t d : dims)
        os << ' ' << d;
    os << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0)
                os << ' ';
            os << format_entry(m(i, j));
        }
        os << '\n';
    }
}

std::pair<ComplexMatrix, Dims> read_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        throw MatrixFormatError("empty matrix file");
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "dims")
        throw MatrixFormatError("matrix file must start with a 'dims' line");
    Dims dims;
    long d = 0;
    while (hs >> d) {
        if (d < 1)
            throw MatrixFormatError("subsystem dimension must be >= 1");
        dims.push_back(static_cast<std::size_t>(d));
    }
    if (dims.empty())
        throw MatrixFormatError("'dims' line lists no dimensions");

    const std::size_t n = total_dim(dims);
    ComplexMatrix m(n, n);
    std::string tok;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!(is >> tok))
                throw MatrixFormatError("matrix file ends after " +
                                        std::to_string(i * n + j) + " of " +
                                        std::to_string(n * n) + " entries");
            m(i, j) = parse_entry(tok);
        }
    return {std::move(m), std::move(dims)};
}

}  // namespace entmom
