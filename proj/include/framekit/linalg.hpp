#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "framekit/types.hpp"

namespace framekit {

struct EigenResult {
    std::vector<double> values;  // non-increasing
    Mat vectors;                 // orthonormal columns, vectors.col(k) pairs with values[k]
};

// Cyclic Jacobi for Hermitian matrices. Each rotation first absorbs the
// phase of the pivot entry, then applies a real 2x2 rotation, so the
// method handles real and complex input uniformly.
inline EigenResult hermitian_eigen(const Mat& s, double herm_tol = 1e-12) {
    if (s.rows() != s.cols()) throw std::invalid_argument("hermitian_eigen: matrix not square");
    {
        double scale = std::max(s.frobenius_norm(), 1.0);
        double asym = s.max_asymmetry();
        if (asym > herm_tol * scale) {
            std::ostringstream os;
            os << "hermitian_eigen: input not Hermitian, max asymmetry " << asym;
            throw std::invalid_argument(os.str());
        }
    }

    const std::size_t n = s.rows();
    Mat a = s;
    // Symmetrize exactly so rounding in the input cannot drift the sweeps.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = cd(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            cd avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    Mat v = Mat::identity(n);

    const double stop = 1e-15 * std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(2.0 * off) <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cd apq = a(p, q);
                double g = std::abs(apq);
                if (g <= 1e-300) continue;
                cd u = apq / g;  // phase, |u| = 1

                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * g);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double sr = t * c;

                // G: identity except G(p,p)=c, G(p,q)=s, G(q,p)=-conj(u)s, G(q,q)=conj(u)c.
                cd gpp = c, gpq = sr, gqp = -std::conj(u) * sr, gqq = std::conj(u) * c;

                for (std::size_t k = 0; k < n; ++k) {  // A <- A G
                    cd ap = a(k, p), aq = a(k, q);
                    a(k, p) = ap * gpp + aq * gqp;
                    a(k, q) = ap * gpq + aq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- G* A
                    cd ap = a(p, k), aq = a(q, k);
                    a(p, k) = std::conj(gpp) * ap + std::conj(gqp) * aq;
                    a(q, k) = std::conj(gpq) * ap + std::conj(gqq) * aq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // V <- V G
                    cd vp = v(k, p), vq = v(k, q);
                    v(k, p) = vp * gpp + vq * gqp;
                    v(k, q) = vp * gpq + vq * gqq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenResult out;
    out.values.resize(n);
    out.vectors = Mat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

// Sum of outer products phi phi* over the given vectors (dim x dim).
inline Mat outer_product_sum(const std::vector<Vec>& vectors, std::size_t dim) {
    Mat s(dim, dim);
    for (const Vec& phi : vectors) {
        if (phi.size() != dim) throw std::invalid_argument("outer_product_sum: dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                s(i, j) += phi[i] * std::conj(phi[j]);
    }
    return s;
}

// Rank via the Gram route: eigenvalues of the outer product sum are the
// squared singular values. The relative threshold is applied to the
// eigenvalues; thresholding sqrt(lambda) instead would turn the solver's
// ~1e-16 eigenvalue noise into ~1e-8 spurious singular values.
inline std::size_t numerical_rank(const std::vector<Vec>& vectors, double tol = 1e-10) {
    if (vectors.empty()) return 0;
    std::size_t dim = vectors[0].size();
    EigenResult eig = hermitian_eigen(outer_product_sum(vectors, dim));
    double lam_max = std::max(eig.values[0], 0.0);
    if (lam_max == 0.0) return 0;
    std::size_t r = 0;
    for (double lam : eig.values)
        if (lam > tol * lam_max) ++r;
    return r;
}

// Orthonormal basis of the orthogonal complement of span(vectors) in dim M.
inline std::vector<Vec> null_space_basis(const std::vector<Vec>& vectors, std::size_t dim,
                                         double tol = 1e-10) {
    if (vectors.empty()) {
        std::vector<Vec> full;
        for (std::size_t k = 0; k < dim; ++k) full.push_back(unit_axis(dim, k));
        return full;
    }
    EigenResult eig = hermitian_eigen(outer_product_sum(vectors, dim));
    double lam_max = std::max(eig.values[0], 0.0);
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < dim; ++k) {
        if (lam_max == 0.0 || eig.values[k] <= tol * lam_max) basis.push_back(eig.vectors.col(k));
    }
    return basis;
}

}  // namespace framekit
