// Copyright 2026 The mrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mrank/error.hpp"

namespace mrank {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadModulus: return "BadModulus";
    case Errc::BadFieldName: return "BadFieldName";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::Singular: return "Singular";
    case Errc::SingularTrailingBlock: return "SingularTrailingBlock";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadHeader: return "BadHeader";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::BadGraph6: return "BadGraph6";
    case Errc::NotAClique: return "NotAClique";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NonIntegralDivision: return "NonIntegralDivision";
    case Errc::PrimeField: return "PrimeField";
    case Errc::NoClique: return "NoClique";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::NoFeasibleScalar: return "NoFeasibleScalar";
    case Errc::TooSmall: return "TooSmall";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::BadMatrixText: return "BadMatrixText";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mrank
