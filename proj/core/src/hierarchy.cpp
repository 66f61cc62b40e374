// Copyright 2026 The dilkit Authors
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

#include "dilkit/hierarchy.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dilkit/errors.hpp"
#include "dilkit/verify.hpp"

namespace dilkit {

std::string_view to_string(ChannelClass c) {
  switch (c) {
    case ChannelClass::kMixedUnitary: return "MU";
    case ChannelClass::kCatalytic: return "CAT";
    case ChannelClass::kEquilibratingUnital: return "EQ_DS";
    case ChannelClass::kFactorizable: return "F";
    case ChannelClass::kDoublyStochastic: return "DS";
  }
  return "?";
}

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::kCertifiedIn: return "CERTIFIED_IN";
    case Membership::kCertifiedOut: return "CERTIFIED_OUT";
    case Membership::kUnknown: return "UNKNOWN";
  }
  return "?";
}

bool HierarchyReport::is_monotone(
    const std::array<ClassStatus, kNumClasses>& c) {
  for (int i = 0; i < kNumClasses; ++i)
    for (int j = i + 1; j < kNumClasses; ++j) {
      // i is a subset of j.
      if (c[i].status == Membership::kCertifiedIn &&
          c[j].status == Membership::kCertifiedOut)
        return false;
    }
  return true;
}

HierarchyReport::HierarchyReport(std::array<ClassStatus, kNumClasses> classes)
    : classes_(std::move(classes)) {
  if (!is_monotone(classes_))
    throw InternalConsistencyError(
        "hierarchy report violates the class inclusions");
}

namespace {

ClassStatus certified(VerificationReport rep) {
  return {Membership::kCertifiedIn, std::move(rep)};
}

void add_channel_match(VerificationReport& rep, const ChannelChoi& produced,
                       const ChannelChoi& target, const Tolerance& tol) {
  rep.add("channel_distance", channel_distance(produced, target), tol.abs_tol);
}

VerificationReport mixed_unitary_certificate(
    const MixedUnitaryDecomposition& dec, const ChannelChoi& target,
    const Tolerance& tol, const std::string& origin) {
  VerificationReport rep("mixed_unitary_certificate");
  rep.add_note(origin);
  double worst_unitarity = 0.0;
  for (const auto& t : dec.terms)
    worst_unitarity = std::max(worst_unitarity, unitarity_residual(t.unitary));
  rep.add("term_unitarity_residual", worst_unitarity, tol.abs_tol);
  add_channel_match(rep, dec.channel(), target, tol);
  return rep;
}

VerificationReport catalytic_certificate(const Dilation& dil,
                                         const ChannelChoi& target,
                                         const Tolerance& tol,
                                         const std::string& origin) {
  VerificationReport rep("catalytic_certificate");
  rep.add_note(origin);
  rep.add("marginal_residual", catalytic_check(dil, tol).marginal_residual,
          tol.abs_tol);
  add_channel_match(rep, channel_of_dilation(dil, tol), target, tol);
  return rep;
}

VerificationReport strong_factorization_certificate(const Dilation& dil,
                                                    const ChannelChoi& target,
                                                    const Tolerance& tol,
                                                    const std::string& origin) {
  VerificationReport rep("strong_factorization_certificate");
  rep.add_note(origin);
  const Matrix lifted = tensor_product(identity(dil.dim_sys), dil.env_state);
  rep.add("env_commutator_residual",
          residual(commutator(dil.unitary, lifted)), tol.abs_tol);
  add_channel_match(rep, channel_of_dilation(dil, tol), target, tol);
  return rep;
}

}  // namespace

HierarchyReport classify(const ChannelChoi& channel,
                         const Certificates& certs, const Tolerance& tol) {
  if (channel.dim_in() != channel.dim_out())
    throw DimensionError("classify: channel is not square");
  channel.validate(tol);
  const int d = channel.dim_in();

  if (certs.mixed_unitary) {
    certs.mixed_unitary->validate(tol);
    if (certs.mixed_unitary->dim() != d)
      throw DimensionError("classify: mixed-unitary certificate dimension");
  }
  for (const auto* dil : {&certs.catalytic, &certs.equilibrating})
    if (*dil) {
      (*dil)->validate(tol);
      if ((*dil)->dim_sys != d)
        throw DimensionError("classify: dilation certificate dimension");
    }

  std::array<ClassStatus, kNumClasses> st;
  auto at = [&](ChannelClass c) -> ClassStatus& {
    return st[static_cast<int>(c)];
  };

  const VerificationReport ds = is_doubly_stochastic(channel, tol);
  if (!ds.pass()) {
    for (auto& s : st) s = {Membership::kCertifiedOut, ds};
    return HierarchyReport(std::move(st));
  }
  at(ChannelClass::kDoublyStochastic) = certified(ds);

  // Mixed unitary.
  std::optional<MixedUnitaryDecomposition> mu;
  auto try_mu = [&](const MixedUnitaryDecomposition& dec,
                    const std::string& origin) {
    if (mu) return;
    VerificationReport rep = mixed_unitary_certificate(dec, channel, tol, origin);
    if (rep.pass()) {
      mu = dec;
      at(ChannelClass::kMixedUnitary) = certified(std::move(rep));
    } else if (at(ChannelClass::kMixedUnitary).certificate.residuals().empty()) {
      at(ChannelClass::kMixedUnitary).certificate = std::move(rep);
    }
  };
  if (certs.mixed_unitary)
    try_mu(*certs.mixed_unitary, "supplied decomposition");
  if (!mu) {
    const auto kraus = channel.kraus(tol);
    if (kraus.size() == 1) {
      MixedUnitaryDecomposition dec;
      dec.terms.push_back({1.0, kraus.front()});
      try_mu(dec, "single Kraus operator");
    }
  }
  for (const auto* dil : {&certs.equilibrating, &certs.catalytic}) {
    if (mu || !*dil) continue;
    try {
      try_mu(extract_mixed_unitary(**dil, tol),
             "read off a non-degenerate dilation");
    } catch (const VerificationError&) {
      // Degenerate or non-commuting: no decomposition from this dilation.
    } catch (const InternalConsistencyError&) {
    }
  }

  // Catalytic.
  std::vector<std::pair<Dilation, std::string>> dilations;
  if (certs.catalytic)
    dilations.emplace_back(*certs.catalytic, "supplied catalytic dilation");
  if (certs.equilibrating)
    dilations.emplace_back(*certs.equilibrating,
                           "supplied equilibrating dilation");
  if (mu) dilations.emplace_back(mu->dilation(), "built from mixed-unitary");

  for (const auto& [dil, origin] : dilations) {
    VerificationReport rep = catalytic_certificate(dil, channel, tol, origin);
    if (rep.pass()) {
      at(ChannelClass::kCatalytic) = certified(std::move(rep));
      break;
    }
    if (at(ChannelClass::kCatalytic).certificate.residuals().empty())
      at(ChannelClass::kCatalytic).certificate = std::move(rep);
  }

  // Equilibrating and unital = strongly factorizable.
  for (const auto& [dil, origin] : dilations) {
    VerificationReport rep =
        strong_factorization_certificate(dil, channel, tol, origin);
    if (rep.pass()) {
      at(ChannelClass::kEquilibratingUnital) = certified(std::move(rep));
      break;
    }
    if (at(ChannelClass::kEquilibratingUnital).certificate.residuals().empty())
      at(ChannelClass::kEquilibratingUnital).certificate = std::move(rep);
  }

  // Factorizable: only via strong factorizability.
  if (at(ChannelClass::kEquilibratingUnital).status ==
      Membership::kCertifiedIn) {
    VerificationReport rep = at(ChannelClass::kEquilibratingUnital).certificate;
    rep.add_note("strongly factorizable implies factorizable");
    at(ChannelClass::kFactorizable) = certified(std::move(rep));
  }

  return HierarchyReport(std::move(st));
}

}  // namespace dilkit
