// Copyright 2026 The eaqecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eaqecc/constacyclic.h"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eaqecc/number_theory.h"

namespace eaqecc {

Ambient::Ambient(const CodeFrame& frame) : frame_(frame), tower_(frame.q()) {
    const Field& small = *tower_.small();
    const Field& big = *tower_.big();
    const std::uint64_t rn = frame_.rn();
    const std::uint64_t ord = frame_.ord_lambda();
    if ((big.order() - 1) % rn != 0) {
        throw std::invalid_argument("rn = " + std::to_string(rn) + " does not divide q^4 - 1; no delta in GF(q^4)");
    }
    lambda_ = small.root_of_unity(ord).value();

    // delta0^n has order ord, as does lambda, so lambda = (delta0^n)^v for a
    // unique v mod ord. Any u = v mod ord with gcd(u, rn) = 1 gives
    // delta = delta0^u of order rn with delta^n = lambda.
    const std::uint64_t delta0 = big.root_of_unity(rn).value();
    const std::uint64_t lambda_big = tower_.embed_raw(lambda_);
    const std::uint64_t delta0_n = big.pow_raw(delta0, frame_.n());
    std::uint64_t v = ord;
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < ord; ++k, cur = big.mul_raw(cur, delta0_n)) {
        if (cur == lambda_big) {
            v = k;
            break;
        }
    }
    if (v == ord) {
        throw std::logic_error("Ambient: lambda is not a power of delta^n");
    }
    std::uint64_t u = v == 0 ? ord : v;
    while (std::gcd(u, rn) != 1) {
        u += ord;
    }
    const std::uint64_t delta = big.pow_raw(delta0, u);

    delta_powers_.resize(rn);
    cur = 1;
    for (std::uint64_t e = 0; e < rn; ++e) {
        delta_powers_[e] = cur;
        cur = big.mul_raw(cur, delta);
    }
    if (cur != 1 || big.multiplicative_order(big.element(delta)) != rn ||
        delta_powers_[frame_.n() % rn] != lambda_big) {
        throw std::logic_error("Ambient: delta construction failed");
    }
}

std::shared_ptr<const Ambient> Ambient::make(const CodeFrame& frame) {
    return std::shared_ptr<const Ambient>(new Ambient(frame));
}

std::shared_ptr<const Ambient> Ambient::for_q(std::uint64_t q) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const Ambient>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) {
        return it->second;
    }
    auto ambient = make(CodeFrame::for_q(q));
    cache.emplace(q, ambient);
    return ambient;
}

ConstacyclicCode::ConstacyclicCode(AmbientPtr ambient, ExponentSet defining_set, Poly generator)
    : ambient_(std::move(ambient)), z_(std::move(defining_set)), generator_(std::move(generator)) {}

ConstacyclicCode build_code(AmbientPtr ambient, const ExponentSet& z) {
    const CodeFrame& frame = ambient->frame();
    for (auto x : z) {
        if (!frame.in_omega(x)) {
            throw std::invalid_argument("defining set element " + std::to_string(x) + " is not in omega");
        }
    }
    if (!is_coset_closed(z, frame)) {
        throw std::invalid_argument("defining set is not a union of q^2-cyclotomic cosets");
    }
    const FieldPtr& big = ambient->big();
    const std::uint64_t q2 = ambient->small()->order();
    Poly g = Poly::constant(ambient->small(), 1);
    for (auto rep : coset_representatives(z, frame)) {
        Poly minimal = minimal_polynomial(big, big->element(ambient->delta_power(rep)), q2);
        g = g * ambient->tower().project(minimal);
    }
    if (g.degree() != static_cast<long>(z.size()) || !g.is_monic()) {
        throw std::logic_error("build_code: generator degree does not match |Z|");
    }
    Poly modulus = Poly::binomial(ambient->small(), frame.n(), ambient->lambda().value());
    if (!modulus.divmod(g).remainder.is_zero()) {
        throw std::logic_error("build_code: generator does not divide x^n - lambda");
    }
    return ConstacyclicCode(std::move(ambient), z, std::move(g));
}

ConstacyclicCode build_code(const CodeFrame& frame, const ExponentSet& z) {
    return build_code(Ambient::make(frame), z);
}

std::string DistanceBound::to_string() const {
    if (exact()) {
        return std::to_string(lower);
    }
    return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

std::uint64_t bch_bound(const ConstacyclicCode& code) {
    return consecutive_run(code.defining_set(), code.frame()) + 1;
}

DistanceBound distance_certificate(const ExponentSet& z, const CodeFrame& frame) {
    const std::uint64_t n = frame.n();
    const std::uint64_t singleton = z.size() + 1;  // n - k + 1
    const std::uint64_t bch = consecutive_run(z, frame) + 1;
    if (z.size() == n) {
        return {n + 1, n + 1, "zero code"};
    }
    if (bch == singleton) {
        return {bch, bch, "BCH∧Singleton"};
    }
    return {bch, singleton, "BCH..Singleton"};
}

DistanceBound distance_certificate(const ConstacyclicCode& code) {
    return distance_certificate(code.defining_set(), code.frame());
}

Matrix parity_check_matrix(const ConstacyclicCode& code) {
    const Ambient& amb = *code.ambient();
    const CodeFrame& frame = code.frame();
    const std::uint64_t n = frame.n();
    const std::uint64_t rn = frame.rn();
    const std::uint64_t q2 = amb.small()->order();
    Matrix h(amb.small(), code.defining_set().size(), n);
    std::size_t row = 0;
    for (auto rep : coset_representatives(code.defining_set(), frame)) {
        const bool singleton = mul_mod(rep, q2, rn) == rep;
        const std::uint64_t rep_frob = mul_mod(rep, q2, rn);
        for (std::uint64_t j = 0; j < n; ++j) {
            auto [a, b] = amb.tower().coordinates_raw(amb.delta_power(mul_mod(j, rep, rn)),
                                                      amb.delta_power(mul_mod(j, rep_frob, rn)));
            h.set(row, j, a);
            if (singleton) {
                if (b != 0) {
                    throw std::logic_error("parity_check_matrix: singleton root row left GF(q^2)");
                }
            } else {
                h.set(row + 1, j, b);
            }
        }
        row += singleton ? 1 : 2;
    }
    if (row != h.rows()) {
        throw std::logic_error("parity_check_matrix: cosets larger than 2 are not supported");
    }
    if (rank(h) != h.rows()) {
        throw std::logic_error("parity_check_matrix: rank deficient; delta or Z inconsistent");
    }
    return h;
}

Matrix generator_matrix(const ConstacyclicCode& code) {
    const std::uint64_t n = code.length();
    const std::uint64_t k = code.dimension();
    Matrix g(code.ambient()->small(), k, n);
    const auto& coeffs = code.generator().coefficients();
    for (std::uint64_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            g.set(i, i + j, coeffs[j]);
        }
    }
    return g;
}

std::vector<std::uint64_t> constacyclic_shift(std::span<const std::uint64_t> word, const Felt& lambda,
                                              const Field& field) {
    std::vector<std::uint64_t> out(word.size());
    if (word.empty()) {
        return out;
    }
    out[0] = field.mul_raw(lambda.value(), word.back());
    for (std::size_t i = 1; i < word.size(); ++i) {
        out[i] = word[i - 1];
    }
    return out;
}

ExponentSet hermitian_dual_defining_set(const ExponentSet& z, const CodeFrame& frame) {
    const std::uint64_t rn = frame.rn();
    const std::uint64_t neg_q = (rn - frame.q() % rn) % rn;
    std::vector<std::uint64_t> out;
    for (auto w : omega(frame)) {
        if (!z.contains(mul_mod(w, neg_q, rn))) {
            out.push_back(w);
        }
    }
    ExponentSet dual(std::move(out));
    if (dual.size() != frame.n() - z.size()) {
        throw std::logic_error("hermitian_dual_defining_set: -q does not permute omega");
    }
    return dual;
}

bool roots_match_defining_set(const ConstacyclicCode& code) {
    const Ambient& amb = *code.ambient();
    const Field& big = *amb.big();
    std::vector<std::uint64_t> lifted;
    for (auto c : code.generator().coefficients()) {
        lifted.push_back(amb.tower().embed_raw(c));
    }
    for (auto w : omega(code.frame())) {
        const std::uint64_t x = amb.delta_power(w);
        std::uint64_t acc = 0;
        for (std::size_t i = lifted.size(); i-- > 0;) {
            acc = big.add_raw(big.mul_raw(acc, x), lifted[i]);
        }
        if ((acc == 0) != code.defining_set().contains(w)) {
            return false;
        }
    }
    return true;
}

}  // namespace eaqecc
