#pragma once

// Resonant Jaynes-Cummings evolution blocks on the truncated Fock space,
// arranged as U = (1/sqrt2) [[V++, V+-], [-V-+, V--]].

#include <string_view>

#include "purity/fock.hpp"

namespace purity {

/// Operator-ordering convention for the lower row of U.
///
/// LiteralPaper: V-+ = -V+-^dag, V-- = V++^dag (not unitary; kept for audit).
/// UnitaryStandard: V-+ = V+-^dag, V-- = sqrt2 cos(2 pi theta sqrt(a^dag a)).
enum class BlockConvention { LiteralPaper, UnitaryStandard };

std::string_view to_string(BlockConvention c);
/// Accepts "literal" / "standard".
BlockConvention parse_convention(std::string_view text);

struct JcmBlocks {
  FockOperator vpp;
  FockOperator vpm;
  FockOperator vmp;
  FockOperator vmm;
  double theta = 0.0;  // vacuum Rabi phase, Omega tau / 2 pi
  BlockConvention convention = BlockConvention::UnitaryStandard;

  Index dim() const { return vpp.dim(); }
};

JcmBlocks build_blocks(double theta, Index dim, BlockConvention convention);

/// The (2d)x(2d) matrix U, 1/sqrt2 prefactor and (2,1) minus sign included.
CMatrix assemble_joint(const JcmBlocks& blocks);

/// max |U^dag U - 1| entrywise.
double unitarity_defect(const CMatrix& u);

/// sigma_+ sigma_- (x) 1 + 1 (x) a^dag a on the composite space.
CMatrix excitation_number(Index dim);

}  // namespace purity
