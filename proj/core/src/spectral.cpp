/*
 * Copyright (c) 2026, the lomac authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lomac/spectral.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace lomac {

namespace {

constexpr double kPinvCutoff = 1e-10;  // relative to sigma_1

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& Z) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Z, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double cutoff = s.size() ? kPinvCutoff * s(0) : 0.0;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > cutoff) inv(k) = 1.0 / s(k);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace

Eigen::VectorXd singular_values(const Eigen::MatrixXd& A) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    return svd.singularValues();
}

Eigen::MatrixXd svd_truncate(const Eigen::MatrixXd& A, int rank) {
    if (rank < 1 || rank > std::min(A.rows(), A.cols()))
        throw std::invalid_argument("svd_truncate: rank out of range");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU().leftCols(rank) * svd.singularValues().head(rank).asDiagonal() *
           svd.matrixV().leftCols(rank).transpose();
}

Completion smcb(const MaskedMatrix& A, const Eigen::MatrixXd& A_init, int rank) {
    if (A_init.rows() != A.rows() || A_init.cols() != A.cols())
        throw std::invalid_argument("smcb: A_init shape mismatch");
    if (rank < 1 || rank > std::min(A.rows(), A.cols()))
        throw std::invalid_argument("smcb: rank out of range");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A_init, Eigen::ComputeThinV);
    const Eigen::MatrixXd V = svd.matrixV().leftCols(rank);  // n x r

    Eigen::MatrixXd out = A_init;
    Mask fallback = Mask::Constant(A.rows(), A.cols(), false);

    for (Index i = 0; i < A.rows(); ++i) {
        std::vector<Index> obs, unobs;
        for (Index j = 0; j < A.cols(); ++j)
            (A.observed(i, j) ? obs : unobs).push_back(j);
        if (obs.empty()) {
            for (Index j : unobs) fallback(i, j) = true;
            continue;  // row kept from A_init
        }
        for (Index j : obs) out(i, j) = A.value(i, j);
        if (unobs.empty()) continue;

        Eigen::MatrixXd basis_obs(rank, static_cast<Index>(obs.size()));      // A11
        Eigen::MatrixXd basis_unobs(rank, static_cast<Index>(unobs.size()));  // A12
        Eigen::RowVectorXd row_obs(static_cast<Index>(obs.size()));           // A21
        for (std::size_t c = 0; c < obs.size(); ++c) {
            basis_obs.col(static_cast<Index>(c)) = V.row(obs[c]).transpose();
            row_obs(static_cast<Index>(c)) = A.value(i, obs[c]);
        }
        for (std::size_t c = 0; c < unobs.size(); ++c)
            basis_unobs.col(static_cast<Index>(c)) = V.row(unobs[c]).transpose();

        const Eigen::RowVectorXd fill = row_obs * pseudo_inverse(basis_obs) * basis_unobs;
        for (std::size_t c = 0; c < unobs.size(); ++c)
            out(i, unobs[c]) = fill(static_cast<Index>(c));
    }
    return {std::move(out), std::move(fallback)};
}

namespace {

double refine_objective(const MaskedMatrix& A, const Eigen::MatrixXd& X,
                        const Eigen::MatrixXd& Y, double ridge) {
    double obj = 0.0;
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j)
            if (A.observed(i, j)) {
                const double r = X.row(i).dot(Y.row(j)) - A.value(i, j);
                obj += r * r;
            }
    if (ridge > 0.0) obj += ridge * (X.squaredNorm() + Y.squaredNorm());
    return obj;
}

// Least-squares re-solve of every row of `target_factor`: for each row i of
// A (transpose=false) minimize sum_{j in O_i} (x . other_j - A_ij)^2 +
// ridge |x|^2. Rank-deficient subproblems fall back to the pseudoinverse.
bool solve_factor(const MaskedMatrix& A, Eigen::MatrixXd& target,
                  const Eigen::MatrixXd& other, double ridge, bool rows_of_A) {
    const int r = static_cast<int>(other.cols());
    const Index count = rows_of_A ? A.rows() : A.cols();
    bool deficient = false;
    for (Index i = 0; i < count; ++i) {
        Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(r, r);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(r);
        Index nobs = 0;
        const Index inner = rows_of_A ? A.cols() : A.rows();
        for (Index j = 0; j < inner; ++j) {
            const bool obs = rows_of_A ? A.observed(i, j) : A.observed(j, i);
            if (!obs) continue;
            const double v = rows_of_A ? A.value(i, j) : A.value(j, i);
            const Eigen::VectorXd g = other.row(j).transpose();
            gram.noalias() += g * g.transpose();
            rhs.noalias() += v * g;
            ++nobs;
        }
        if (nobs == 0) continue;  // keep previous factor row
        if (ridge > 0.0) gram.diagonal().array() += ridge;
        if (ridge > 0.0 && nobs >= r) {
            target.row(i) = gram.ldlt().solve(rhs).transpose();
        } else {
            // possibly rank-deficient; minimum-norm least squares
            if (nobs < r) deficient = true;
            target.row(i) = (pseudo_inverse(gram) * rhs).transpose();
        }
    }
    return deficient;
}

}  // namespace

RefineResult refine(const MaskedMatrix& A, const Eigen::MatrixXd& A_init,
                    const RefineConfig& config) {
    if (config.rank < 1 || config.rank > std::min(A.rows(), A.cols()))
        throw std::invalid_argument("refine: rank out of range");
    if (config.max_iters < 1 || !(config.rel_tol > 0.0))
        throw std::invalid_argument("refine: invalid iteration parameters");
    if (A_init.rows() != A.rows() || A_init.cols() != A.cols())
        throw std::invalid_argument("refine: A_init shape mismatch");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(A_init, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXd X =
        svd.matrixU().leftCols(config.rank) * svd.singularValues().head(config.rank).asDiagonal();
    Eigen::MatrixXd Y = svd.matrixV().leftCols(config.rank);

    RefineResult result;
    result.objective.push_back(refine_objective(A, X, Y, config.ridge));
    for (int it = 0; it < config.max_iters; ++it) {
        result.hit_rank_deficiency |= solve_factor(A, X, Y, config.ridge, true);
        result.hit_rank_deficiency |= solve_factor(A, Y, X, config.ridge, false);
        const double obj = refine_objective(A, X, Y, config.ridge);
        const double prev = result.objective.back();
        result.objective.push_back(obj);
        if (prev - obj <= config.rel_tol * std::max(prev, 1e-300)) break;
    }
    result.values = X * Y.transpose();
    return result;
}

int estimate_rank(const Eigen::MatrixXd& A_filled, int max_rank) {
    const Eigen::VectorXd s = singular_values(A_filled);
    if (max_rank < 1 || max_rank >= std::min(A_filled.rows(), A_filled.cols()))
        throw std::invalid_argument("estimate_rank: max_rank out of range");
    const double tau = 1e-12 * s(0);
    int best_k = 1;
    double best = -1.0;
    for (int k = 1; k <= max_rank; ++k) {
        const double gap = (s(k - 1) - s(k)) / (s(k) + tau);
        if (gap > best) {  // strict: ties break toward smaller k
            best = gap;
            best_k = k;
        }
    }
    return best_k;
}

std::vector<double> spectral_gaps(const Eigen::MatrixXd& A_filled, int count) {
    const Eigen::VectorXd s = singular_values(A_filled);
    if (count < 1 || count + 2 > s.size())
        throw std::invalid_argument("spectral_gaps: count out of range");
    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(count));
    for (int g = 0; g < count; ++g) gaps.push_back(s(g + 1) - s(g + 2));
    return gaps;
}

double singular_vector_alignment(const Eigen::MatrixXd& estimate,
                                 const Eigen::MatrixXd& truth, int k) {
    if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
        throw std::invalid_argument("singular_vector_alignment: shape mismatch");
    if (k < 1 || k > std::min(estimate.rows(), estimate.cols()))
        throw std::invalid_argument("singular_vector_alignment: k out of range");
    Eigen::BDCSVD<Eigen::MatrixXd> se(estimate, Eigen::ComputeThinV);
    Eigen::BDCSVD<Eigen::MatrixXd> st(truth, Eigen::ComputeThinV);
    return std::abs(se.matrixV().col(k - 1).dot(st.matrixV().col(k - 1)));
}

}  // namespace lomac
