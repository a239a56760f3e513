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

#include "lomac/methods.hpp"

#include <algorithm>
#include <stdexcept>

#include "lomac/rank1.hpp"

namespace lomac {

namespace {

struct ParsedSpec {
    std::string name;
    std::string arg;  // empty when no composition argument
};

ParsedSpec parse_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return {spec, {}};
    if (spec.back() != ')')
        throw std::invalid_argument("method spec: unbalanced parentheses in '" + spec + "'");
    return {spec.substr(0, open), spec.substr(open + 1, spec.size() - open - 2)};
}

Eigen::MatrixXd mean_fill(const MaskedMatrix& A) {
    double mean = 0.0;
    for (auto [i, j] : A.observed_positions()) mean += A.value(i, j);
    mean /= static_cast<double>(A.observed_count());
    Eigen::MatrixXd out = Eigen::MatrixXd::Constant(A.rows(), A.cols(), mean);
    for (auto [i, j] : A.observed_positions()) out(i, j) = A.value(i, j);
    return out;
}

int resolve_rank(const MethodContext& ctx, const Eigen::MatrixXd& init) {
    if (ctx.rank > 0) return ctx.rank;
    const int max_rank = static_cast<int>(
        std::min<Index>(10, std::min(init.rows(), init.cols()) - 1));
    return estimate_rank(init, std::max(1, max_rank));
}

}  // namespace

std::vector<std::string> registered_method_names() {
    return {"faccro",       "vmclosure",     "svt",  "riegel", "meanfill",
            "zerofill",     "meanfill-svd",  "zerofill-svd",   "optspace-like",
            "smcb",         "mos"};
}

bool is_known_method(const std::string& method_spec) {
    ParsedSpec p;
    try {
        p = parse_spec(method_spec);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const auto names = registered_method_names();
    if (std::find(names.begin(), names.end(), p.name) == names.end()) return false;
    if (p.name == "smcb" || p.name == "mos")
        return !p.arg.empty() && is_known_method(p.arg);
    return p.arg.empty();
}

Eigen::MatrixXd run_method(const std::string& method_spec, const MaskedMatrix& A,
                           const MethodContext& ctx) {
    const auto [name, arg] = parse_spec(method_spec);

    if (name == "faccro") {
        if (!arg.empty()) throw std::invalid_argument("faccro takes no argument");
        return faccro_all(A).values;
    }
    if (name == "vmclosure") {
        if (!arg.empty()) throw std::invalid_argument("vmclosure takes no argument");
        ClosureConfig cfg = ctx.closure;
        if (ctx.rank > 0) cfg.target_rank = ctx.rank;
        cfg.seed = ctx.seed;
        return vmclosure_all(A, cfg).values;
    }
    if (name == "svt") {
        if (!arg.empty()) throw std::invalid_argument("svt takes no argument");
        return svt_complete(A, ctx.svt, ctx.seed);
    }
    if (name == "riegel") {
        if (!arg.empty()) throw std::invalid_argument("riegel takes no argument");
        if (!ctx.distances)
            throw std::invalid_argument("riegel requires per-column distances");
        auto result = riegel_complete(A, *ctx.distances);
        // make the grid total for MSE evaluation
        if (result.fallback.any()) {
            const Eigen::MatrixXd fill = mean_fill(A);
            for (Index i = 0; i < A.rows(); ++i)
                for (Index j = 0; j < A.cols(); ++j)
                    if (result.fallback(i, j)) result.values(i, j) = fill(i, j);
        }
        return result.values;
    }
    if (name == "meanfill") {
        if (!arg.empty()) throw std::invalid_argument("meanfill takes no argument");
        return mean_fill(A);
    }
    if (name == "zerofill") {
        if (!arg.empty()) throw std::invalid_argument("zerofill takes no argument");
        return A.values_with_zeros();
    }
    if (name == "zerofill-svd" || name == "meanfill-svd") {
        if (!arg.empty()) throw std::invalid_argument(name + " takes no argument");
        const Eigen::MatrixXd init =
            name == "zerofill-svd" ? A.values_with_zeros() : mean_fill(A);
        return svd_truncate(init, resolve_rank(ctx, init));
    }
    if (name == "optspace-like") {
        if (!arg.empty()) throw std::invalid_argument("optspace-like takes no argument");
        const Eigen::MatrixXd init = mean_fill(A);
        RefineConfig cfg = ctx.refine;
        cfg.rank = resolve_rank(ctx, init);
        return refine(A, init, cfg).values;
    }
    if (name == "smcb") {
        if (arg.empty()) throw std::invalid_argument("smcb requires an init method");
        const Eigen::MatrixXd init = run_method(arg, A, ctx);
        return smcb(A, init, resolve_rank(ctx, init)).values;
    }
    if (name == "mos") {
        if (arg.empty()) throw std::invalid_argument("mos requires an init method");
        const Eigen::MatrixXd init = run_method(arg, A, ctx);
        RefineConfig cfg = ctx.refine;
        cfg.rank = resolve_rank(ctx, init);
        return refine(A, init, cfg).values;
    }
    throw std::invalid_argument("unknown completion method: '" + method_spec + "'");
}

}  // namespace lomac
