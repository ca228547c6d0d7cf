#pragma once

// Brute-force dense-matrix reference used as the independent oracle in tests.
// Everything here is assembled from the defining 2x2 Hadamard and explicit
// basis permutations/phases; none of it calls the library's transform code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace dense {

using Complex = std::complex<double>;
using Mat = std::vector<std::vector<Complex>>;
using Vec = std::vector<Complex>;

inline Mat identity(std::size_t dim) {
    Mat m(dim, Vec(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ar = a.size(), ac = a[0].size();
    const std::size_t br = b.size(), bc = b[0].size();
    Mat m(ar * br, Vec(ac * bc, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) m[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return m;
}

inline Mat hadamard(int qubits) {
    const double s = 1.0 / std::sqrt(2.0);
    const Mat h1 = {{s, s}, {s, -s}};
    Mat m = identity(1);
    for (int q = 0; q < qubits; ++q) m = kron(m, h1);
    return m;
}

// Negates every basis state whose index register (high-order block) equals p.
inline Mat sign_oracle(int index_qubits, int data_qubits, std::uint64_t p) {
    const std::size_t dim = std::size_t{1} << (index_qubits + data_qubits);
    Mat m = identity(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b >> data_qubits) == p) m[b][b] = -1.0;
    }
    return m;
}

// -(I - 2|0><0|): all-zeros basis state kept, every other one negated.
inline Mat zero_phase_oracle(std::size_t dim) {
    Mat m = identity(dim);
    for (std::size_t b = 0; b < dim; ++b) m[b][b] = -1.0;
    m[0][0] = 1.0;
    return m;
}

// Permutation sending |i>|x> to |i>|x ^ values[i]>.
inline Mat xor_permutation(int index_qubits, int data_qubits,
                           const std::vector<std::uint64_t>& values) {
    const std::size_t dim = std::size_t{1} << (index_qubits + data_qubits);
    const std::uint64_t block = std::uint64_t{1} << data_qubits;
    Mat m(dim, Vec(dim, Complex{0.0, 0.0}));
    for (std::size_t b = 0; b < dim; ++b) {
        const std::uint64_t i = b >> data_qubits;
        const std::uint64_t x = b & (block - 1);
        const std::uint64_t y = i < values.size() ? (x ^ values[i]) : x;
        m[(i << data_qubits) | y][b] = 1.0;
    }
    return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    Mat m(rows, Vec(cols, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            const Complex aik = a[i][k];
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] += aik * b[k][j];
        }
    return m;
}

inline Vec matvec(const Mat& a, const Vec& v) {
    Vec out(a.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

// H^(n+m) . Op . H^(n+m) . Os as one dense product.
inline Mat grover_matrix(int index_qubits, int data_qubits, std::uint64_t p) {
    const int total = index_qubits + data_qubits;
    const Mat h = hadamard(total);
    const Mat op = zero_phase_oracle(std::size_t{1} << total);
    const Mat os = sign_oracle(index_qubits, data_qubits, p);
    return matmul(matmul(matmul(h, op), h), os);
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double max_diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
    return max_diff;
}

// max |(A^dagger A - I)_{jk}|.
inline double unitarity_defect(const Mat& a) {
    const std::size_t dim = a.size();
    double defect = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            Complex dot{0.0, 0.0};
            for (std::size_t i = 0; i < dim; ++i) dot += std::conj(a[i][j]) * a[i][k];
            const Complex expected = j == k ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            defect = std::max(defect, std::abs(dot - expected));
        }
    }
    return defect;
}

}  // namespace dense
