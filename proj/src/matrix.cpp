#include "sshk/matrix.hpp"

#include <sstream>

#include "sshk/errors.hpp"

namespace sshk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    data.reserve(rows * cols);
    for (const auto& row : init) {
        if (row.size() != cols) throw InputError("ragged matrix literal");
        for (long v : row) data.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data)
        if (v != 0) return false;
    return true;
}

Int IntMatrix::trace() const {
    Int t = 0;
    for (std::size_t i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw InputError("matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InputError("matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] + b.data[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InputError("matrix difference dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
    return c;
}

IntMatrix IntMatrix::pow(unsigned e) const {
    IntMatrix result = IntMatrix::identity(rows);
    IntMatrix base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols), data(m.data.size()) {
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = m.data[i];
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    data.reserve(rows * cols);
    for (const auto& row : init) {
        if (row.size() != cols) throw InputError("ragged matrix literal");
        for (const Rat& v : row) data.push_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.rows) throw InputError("matrix product dimension mismatch");
    RatMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw InputError("matrix difference dimension mismatch");
    RatMatrix c(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
    return c;
}

std::size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, j) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, j) == 0) continue;
            Rat f = m.at(i, j) / m.at(r, j);
            for (std::size_t k = j; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
        }
        ++r;
    }
    return r;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows) throw InputError("hconcat row mismatch");
    IntMatrix c(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows != m.cols) throw InputError("determinant of non-square matrix");
    RatMatrix a = m;
    Rat det = 1;
    std::size_t n = a.rows;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t piv = j;
        while (piv < n && a.at(piv, j) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != j) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a.at(piv, k), a.at(j, k));
            det = -det;
        }
        det *= a.at(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a.at(i, j) == 0) continue;
            Rat f = a.at(i, j) / a.at(j, j);
            for (std::size_t k = j; k < n; ++k) a.at(i, k) -= f * a.at(j, k);
        }
    }
    return det;
}

Int determinant(const IntMatrix& m) {
    Rat d = determinant(RatMatrix(m));
    return d.get_num();  // denominator is 1 for integer input
}

}  // namespace sshk
