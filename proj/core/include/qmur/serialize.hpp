// Copyright 2026 The qmur Authors
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

// nlohmann::json adapters for the domain types. Vectors are 3-element
// arrays; field names follow the C++ member names. from_json re-runs the
// construction invariants, so a malformed document throws InvalidArgument
// (or nlohmann::json::exception for a structurally wrong one).

#ifndef QMUR_SERIALIZE_HPP
#define QMUR_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "qmur/bloch.hpp"
#include "qmur/compat.hpp"
#include "qmur/experiments.hpp"
#include "qmur/montecarlo.hpp"
#include "qmur/noiseop.hpp"
#include "qmur/tradeoff.hpp"
#include "qmur/transport.hpp"

namespace qmur {

using json = nlohmann::json;

void to_json(json& j, const BlochVector& v);
void from_json(const json& j, BlochVector& v);

void to_json(json& j, const QubitState& s);
void from_json(const json& j, QubitState& s);

void to_json(json& j, const BinaryObservable& o);
void from_json(const json& j, BinaryObservable& o);

void to_json(json& j, const HermitianMatrix2& m);
void from_json(const json& j, HermitianMatrix2& m);

void to_json(json& j, const OutcomeValues& v);
void from_json(const json& j, OutcomeValues& v);

void to_json(json& j, const BinaryDistribution& d);
void from_json(const json& j, BinaryDistribution& d);

void to_json(json& j, const Coupling& c);
void from_json(const json& j, Coupling& c);

void to_json(json& j, const JointElement& e);
void from_json(const json& j, JointElement& e);

void to_json(json& j, const JointObservable& g);
void from_json(const json& j, JointObservable& g);

void to_json(json& j, const UnsharpnessCriterion& u);
void to_json(json& j, const JointCheck& c);

void to_json(json& j, const TradeoffReport& r);
void from_json(const json& j, TradeoffReport& r);

void to_json(json& j, const QurBound& b);
void to_json(json& j, const OptimalPair& p);
void from_json(const json& j, OptimalPair& p);
void to_json(json& j, const ProductBound& p);
void to_json(json& j, const PrepSumRelations& p);
void to_json(json& j, const SmearingDistribution& s);
void from_json(const json& j, SmearingDistribution& s);
void to_json(json& j, const SmearingResult& s);
void to_json(json& j, const BoundChain& c);
void to_json(json& j, const HwCovariantForm& f);

void to_json(json& j, const NoiseOpReport& r);
void from_json(const json& j, NoiseOpReport& r);

void to_json(json& j, const ViennaConfig& c);
void from_json(const json& j, ViennaConfig& c);
void to_json(json& j, const TorontoConfig& c);
void from_json(const json& j, TorontoConfig& c);
void to_json(json& j, const SchemeResult& r);
void to_json(json& j, const SequentialJoint& s);
void to_json(json& j, const TorontoRelations& r);
void to_json(json& j, const SweepRow& r);
void from_json(const json& j, SweepRow& r);

void to_json(json& j, const ShotRecord& r);
void from_json(const json& j, ShotRecord& r);
void to_json(json& j, const ErrorAnalysisOptions& o);
void from_json(const json& j, ErrorAnalysisOptions& o);
void to_json(json& j, const StateErrorEstimate& e);
void to_json(json& j, const ErrorAnalysisReport& r);

}  // namespace qmur

#endif  // QMUR_SERIALIZE_HPP
