#pragma once

namespace uqc {

// Default thresholds. Every operation that uses one takes it as a parameter.
inline constexpr double kTauSym = 1e-12;    // skew-Hermitian defect, relative to max(1, max entry)
inline constexpr double kTauTrace = 1e-12;  // |trace| <= tau * d * max entry (SU mode)
inline constexpr double kTauDiag = 1e-12;   // designated generator off-diagonal, relative
inline constexpr double kTauSpec = 1e-9;    // eigenphase separation, relative to max |theta|
inline constexpr double kTauEdge = 1e-12;   // coupling-graph cutoff, relative to max entry
inline constexpr double kTauRank = 1e-10;   // rank decisions
inline constexpr double kTauRel = 1e-9;     // integer-relation residual
inline constexpr int kRelationBound = 10;   // integer-relation coefficient bound H
inline constexpr double kTauClose = 1e-9;   // Lie-closure residual

}  // namespace uqc
