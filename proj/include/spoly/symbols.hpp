#pragma once

#include "spoly/operators.hpp"
#include "spoly/stability.hpp"

namespace spoly {

// Which 2n-variable test polynomial characterizes preservation.
enum class SymbolKind {
  HalfPlaneAdd,   // sum binom(kappa,a) T(z^a) w^{kappa-a}
  DiskProduct,    // sum binom(kappa,a) T(z^a) w^a
  RealPlus,       // HalfPlaneAdd over the reals
  RealMinus,      // sum binom(kappa,a) T(z^a) (-w)^{kappa-a}
};

// The algebraic symbol of T in 2n variables: image variables first, then
// the w block. Requires T.kappa == kappa.
Polynomial algebraic_symbol(const MonomialOperator& op, const MultiIndex& kappa,
                            SymbolKind kind);

// Truncated power series in the w block.
struct TruncatedSeries {
  Polynomial base;  // 2n variables
  int order = 0;    // w-block total-degree truncation
};

// sum_{|a| <= order} (sign)^{|a|} T(z^a) w^a / a!; sign -1 matches the
// upper-half-plane convention, +1 the right-half-plane one. The rule is
// consulted for every |a| <= order.
TruncatedSeries transcendental_symbol(
    const std::function<Polynomial(const MultiIndex&)>& rule, int nvars,
    int order, int sign);
TruncatedSeries transcendental_symbol(const MonomialOperator& op, int order,
                                      int sign);

struct PreservationReport {
  enum class Verdict {
    PreservesCertified,
    PreservesLikely,
    NotPreserving,
    RankOneBranch,
  };
  Verdict verdict = Verdict::PreservesLikely;
  Polynomial symbol;
  StabilityVerdict symbol_verdict;
  int table_rank = 0;
  Polynomial range_generator;      // RankOneBranch: the image direction P
  StabilityVerdict range_verdict;  // stability of P
  Polynomial witness_input;        // NotPreserving: stable f with unstable T(f)
  StabilityVerdict image_verdict;  // falsification of T(witness_input)
  bool rank_two_real_pair = false; // detected two-dimensional real branch
  std::string note;
};

// Decide preservation of domain-stability for a kappa-bounded operator via
// its symbol. Half-planes and disks are the classified cases. A falsified
// symbol with a rank-one table still preserves when the image direction is
// stable; rank >= 2 triggers a witness search through the generator suite.
PreservationReport preservation_test(const MonomialOperator& op,
                                     const MultiIndex& kappa,
                                     const CircularDomain& domain,
                                     const FalsifyOptions& opt = {});

// Numerical rank of the coefficient matrix of the table (singular values
// above 1e-9 of the largest).
int operator_table_rank(const MonomialOperator& op);

}  // namespace spoly
