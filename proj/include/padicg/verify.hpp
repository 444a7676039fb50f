#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicg/residue.hpp"

namespace padicg {

struct VerificationRecord {
    std::string task;
    u64 p = 0;
    std::string subject;
    std::string lhs;
    std::string rhs;
    i64 lhs_val = 0;
    i64 rhs_val = 0;
    bool match = false;
};

struct VerificationSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<u64> seed;
    double elapsed_ms = 0.0;
    bool pass() const { return failed == 0; }
};

struct SampleMode {
    unsigned count;
    u64 seed;
};

// Trace formula against the enumeration oracles over a prime range: every
// admissible short curve when exhaustive, otherwise `count` seeded-random
// curves per prime.  One record per curve, in deterministic order.
VerificationSummary verify_trace_range(u64 p_min, u64 p_max,
                                       const std::optional<SampleMode>& sample,
                                       unsigned n_target,
                                       std::vector<VerificationRecord>& out);

// Model-independence: random admissible transforms applied to random short
// curves; the general-model trace must match enumeration on the original.
VerificationSummary verify_transforms(u64 p_min, u64 p_max, unsigned curves_per_prime,
                                      unsigned transforms_per_curve, u64 seed,
                                      unsigned n_target,
                                      std::vector<VerificationRecord>& out);

// Gamma-function identity suite (reflection, multiplication, the two
// index-shift identities) plus character orthogonality, the Gauss-sum product
// rule, Hasse-Davenport, additive-character reconstruction, and the
// point-count formula on small primes.  Aggregated records per (task, p).
VerificationSummary verify_identities(u64 p_max, unsigned n_target,
                                      std::vector<VerificationRecord>& out);

// Gauss-sum route to a_p against enumeration for all admissible curves.
VerificationSummary verify_gauss_ap(const std::vector<u64>& primes, unsigned n_target,
                                    std::vector<VerificationRecord>& out);

// Cusp-form coefficient identities: the 4-parameter character sum at t = 1
// against c(p) for odd p != 5 up to p_max, and the order-5 hypergeometric
// variant for p = 1 (mod 5).
VerificationSummary verify_modform(u64 p_max, unsigned n_target,
                                   std::vector<VerificationRecord>& out);

// Sum equality between the two hypergeometric routes at random arguments.
VerificationSummary verify_lemma_gf(const std::vector<u64>& primes, unsigned trials,
                                    u64 seed, unsigned n_target,
                                    std::vector<VerificationRecord>& out);

// Order-12 character trace against enumeration.
VerificationSummary verify_lennon(const std::vector<u64>& primes, unsigned sample_count,
                                  u64 seed, unsigned n_target,
                                  std::vector<VerificationRecord>& out);

// The four characteristic-3 curves.
VerificationSummary verify_p3(unsigned n_target, std::vector<VerificationRecord>& out);

std::string record_to_json(const VerificationRecord& r);
std::string summary_to_json(const VerificationSummary& s, bool with_timing);
std::string record_to_csv(const VerificationRecord& r);
std::string csv_header();

} // namespace padicg
