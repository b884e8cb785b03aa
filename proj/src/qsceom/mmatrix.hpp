// Copyright 2026 The augerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qsceom/engine.hpp"

namespace augerqc::qsceom {

/// Per-irrep blocks of <psi_u|O|psi_v>, slots ordered A1, A2, B1, B2.
struct BlockMatrix {
  Channel channel = Channel::IP;
  std::array<Eigen::MatrixXcd, 4> blocks;
};
using MMatrix = BlockMatrix;

/// Superposition assembly of a Hermitian operator over every block: n
/// diagonal and 2 C(n,2) phase measurements per block.
BlockMatrix measure_blocks(SubspaceEngine& engine, const ChannelBasis& basis, const simulator::CompiledOperator& op);
/// Oracle assembly by explicit operator application.
BlockMatrix direct_blocks(SubspaceEngine& engine, const ChannelBasis& basis, const simulator::PauliSum& op);

double max_hermiticity_error(const BlockMatrix& m);

struct BlockSolution {
  Irrep irrep = Irrep::A1;
  Eigen::VectorXd energies;          // ascending, hartree
  Eigen::MatrixXcd vectors;          // columns
  std::vector<double> s2;            // <S^2> per state, empty when unknown
  std::vector<int> multiplicity;     // 2S+1 per state, 0 when unknown
  double max_residual = 0.0;         // || M c - E c || over the block (projected M when purified)
};

struct EigenSolution {
  Channel channel = Channel::IP;
  std::array<BlockSolution, 4> blocks;
  std::vector<std::string> warnings;

  [[nodiscard]] const BlockSolution& block(Irrep irrep) const;
};

/// Dense Hermitian diagonalization per block. Degenerate eigenvectors are
/// brought to a reproducible basis and every vector's largest component is
/// made real positive. With `s2` the states also get <S^2> and the nearest
/// multiplicity (parity from n_electrons).
EigenSolution solve_blocks(const BlockMatrix& m, const BlockMatrix* s2 = nullptr, int n_electrons = 0,
                           double hermiticity_tol = 1e-10);

/// Partitions each block's S^2 eigenvectors by nearest ideal S(S+1) with
/// integer or half-integer S from the electron parity, projects M onto
/// every sector and diagonalizes there. Equidistant S^2 values go to the
/// smaller S and are reported in `warnings`.
EigenSolution s2_purify(const BlockMatrix& m, const BlockMatrix& s2, int n_electrons, double hermiticity_tol = 1e-10);

/// Nearest 2S+1 for an <S^2> value; ties resolve to the smaller S.
int nearest_multiplicity(double s2, int n_electrons, bool* tie = nullptr);
std::string multiplicity_label(int multiplicity);

/// Reproducible basis for a (near-)degenerate set of columns.
Eigen::MatrixXcd canonical_subspace(const Eigen::MatrixXcd& v);

}  // namespace augerqc::qsceom
