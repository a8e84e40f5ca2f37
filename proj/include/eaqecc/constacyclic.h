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

#ifndef EAQECC_CONSTACYCLIC_H
#define EAQECC_CONSTACYCLIC_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eaqecc/cosets.h"
#include "eaqecc/field.h"
#include "eaqecc/matrix.h"
#include "eaqecc/poly.h"
#include "eaqecc/tower.h"

namespace eaqecc {

/// Everything fixed once the frame is chosen: the tower GF(q^2) ⊂ GF(q^4), the
/// shift constant lambda = g^((q^2-1)/ord_lambda) in GF(q^2), and a primitive
/// rn-th root of unity delta in GF(q^4) with delta^n = lambda.
class Ambient {
  public:
    /// Requires rn | q^4 - 1.
    static std::shared_ptr<const Ambient> make(const CodeFrame& frame);
    /// Memoized make(CodeFrame::for_q(q)); thread-safe.
    static std::shared_ptr<const Ambient> for_q(std::uint64_t q);

    const CodeFrame& frame() const {
        return frame_;
    }
    const Tower& tower() const {
        return tower_;
    }
    const FieldPtr& small() const {
        return tower_.small();
    }
    const FieldPtr& big() const {
        return tower_.big();
    }
    Felt lambda() const {
        return small()->element(lambda_);
    }
    Felt delta() const {
        return big()->element(delta_powers_[1 % frame_.rn()]);
    }
    /// delta^e, packed, for any e (reduced mod rn).
    std::uint64_t delta_power(std::uint64_t e) const {
        return delta_powers_[e % frame_.rn()];
    }

  private:
    Ambient(const CodeFrame& frame);

    CodeFrame frame_;
    Tower tower_;
    std::uint64_t lambda_ = 0;
    std::vector<std::uint64_t> delta_powers_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

/// A lambda-constacyclic code of length n over GF(q^2) given by its defining set.
class ConstacyclicCode {
  public:
    ConstacyclicCode(AmbientPtr ambient, ExponentSet defining_set, Poly generator);

    const AmbientPtr& ambient() const {
        return ambient_;
    }
    const CodeFrame& frame() const {
        return ambient_->frame();
    }
    const ExponentSet& defining_set() const {
        return z_;
    }
    const Poly& generator() const {
        return generator_;
    }
    std::uint64_t length() const {
        return frame().n();
    }
    std::uint64_t dimension() const {
        return frame().n() - z_.size();
    }
    Felt lambda() const {
        return ambient_->lambda();
    }

  private:
    AmbientPtr ambient_;
    ExponentSet z_;
    Poly generator_;
};

/// Builds the code with generator prod over the cosets of Z of the minimal
/// polynomial of delta^rep over GF(q^2). Z must be a coset-closed subset of omega.
ConstacyclicCode build_code(AmbientPtr ambient, const ExponentSet& z);
ConstacyclicCode build_code(const CodeFrame& frame, const ExponentSet& z);

/// A distance interval [lower, upper]; exact when they coincide.
struct DistanceBound {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::string certificate;

    bool exact() const {
        return lower == upper;
    }
    /// "7" or "[2,10]"
    std::string to_string() const;
    /// Compares the interval only; the certificate is provenance.
    bool operator==(const DistanceBound& other) const {
        return lower == other.lower && upper == other.upper;
    }
};

/// consecutive_run(Z) + 1
std::uint64_t bch_bound(const ConstacyclicCode& code);

/// Exact d = n - k + 1 when the BCH bound meets the Singleton bound, otherwise
/// the bracket [BCH, n - k + 1]. Depends only on Z.
DistanceBound distance_certificate(const ExponentSet& z, const CodeFrame& frame);
DistanceBound distance_certificate(const ConstacyclicCode& code);

/// |Z| x n parity-check matrix over GF(q^2). Each coset contributes the row
/// (delta^(j*rep))_j over GF(q^4), split into coordinate rows over the basis
/// {1, beta}. Throws std::logic_error if the result is rank deficient.
Matrix parity_check_matrix(const ConstacyclicCode& code);

/// k x n matrix whose row i holds the coefficients of x^i g(x).
Matrix generator_matrix(const ConstacyclicCode& code);

/// (lambda*x_{n-1}, x_0, ..., x_{n-2})
std::vector<std::uint64_t> constacyclic_shift(std::span<const std::uint64_t> word, const Felt& lambda,
                                              const Field& field);

/// {z in omega : -qz mod rn not in Z}
ExponentSet hermitian_dual_defining_set(const ExponentSet& z, const CodeFrame& frame);

/// g(delta^w) = 0 exactly for w in Z, over all w in omega.
bool roots_match_defining_set(const ConstacyclicCode& code);

}  // namespace eaqecc

#endif  // EAQECC_CONSTACYCLIC_H
