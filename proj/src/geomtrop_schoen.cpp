#include "tropkit/geomtrop_schoen.hpp"

#include "tropkit/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropkit {

namespace {

std::vector<std::string> sorted_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

// strata sorted by (size, ids), duplicates removed
std::vector<std::vector<std::string>> canonical_strata(const BoundaryData& data) {
  std::set<std::vector<std::string>> seen;
  for (const auto& s : data.strata) seen.insert(sorted_ids(s));
  std::vector<std::vector<std::string>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::map<std::string, const BoundaryDivisor*> divisor_index(const BoundaryData& data) {
  std::map<std::string, const BoundaryDivisor*> out;
  for (const auto& d : data.divisors) out[d.id] = &d;
  return out;
}

}  // namespace

void validate_boundary_data(const BoundaryData& data) {
  if (data.rank == 0) throw InvalidArgument("boundary data needs lattice rank at least 1");
  std::set<std::string> ids;
  for (const auto& d : data.divisors) {
    if (!ids.insert(d.id).second) throw InvalidArgument("duplicate divisor id " + d.id);
    if (d.val.size() != data.rank) throw RankMismatch("divisor " + d.id + " has a valuation vector of wrong rank");
  }
  std::set<std::vector<std::string>> strata;
  for (const auto& s : data.strata) {
    const auto sorted = sorted_ids(s);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidArgument("malformed nerve: stratum repeats a divisor");
    for (const auto& id : sorted)
      if (!ids.count(id)) throw InvalidArgument("malformed nerve: unknown divisor id " + id);
    strata.insert(sorted);
  }
  if (!strata.count({})) throw InvalidArgument("malformed nerve: the empty stratum is missing");
  for (const auto& s : strata)
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      if (!strata.count(sub)) {
        std::string name;
        for (const auto& id : sub) name += (name.empty() ? "" : " ") + id;
        throw InvalidArgument("malformed nerve: missing subset {" + name + "}");
      }
    }
}

GeomTropResult geometric_tropicalization(const BoundaryData& data) {
  validate_boundary_data(data);
  const auto index = divisor_index(data);
  GeomTropResult out{{}, {}};
  std::vector<Cone> cones;
  for (const auto& s : canonical_strata(data)) {
    std::vector<ZVector> gens;
    for (const auto& id : s) gens.push_back(index.at(id)->val);
    bool simplicial = true;
    if (!gens.empty()) {
      const SmithDecomposition snf = smith_normal_form(ZMatrix::from_columns(gens, data.rank));
      const auto factors = snf.invariant_factors();
      simplicial = snf.rank == gens.size() &&
                   std::all_of(factors.begin(), factors.end(), [](const Integer& f) { return f == 1; });
    }
    Cone c = Cone::from_integer_generators(data.rank, gens);
    cones.push_back(c);
    out.cones.push_back(StratumCone{s, std::move(c), simplicial});
  }
  out.fan_status = validate_fan(data.rank, cones);
  return out;
}

std::optional<ZVector> check_condition2(const BoundaryData& data, const std::vector<std::string>& stratum,
                                        const std::string& pivot) {
  const auto index = divisor_index(data);
  if (std::find(stratum.begin(), stratum.end(), pivot) == stratum.end())
    throw InvalidArgument("pivot divisor " + pivot + " is not in the stratum");
  std::vector<ZVector> rows;
  ZVector rhs;
  for (const auto& id : stratum) {
    auto it = index.find(id);
    if (it == index.end()) throw InvalidArgument("unknown divisor id " + id);
    rows.push_back(it->second->val);
    rhs.emplace_back(id == pivot ? 1 : 0);
  }
  auto sol = solve_integer_linear(ZMatrix::from_rows(rows, data.rank), rhs);
  if (!sol) return std::nullopt;
  return sol->solution;
}

SchoenCertificate schoen_certificate(const BoundaryData& data) {
  SchoenCertificate out{geometric_tropicalization(data)};
  out.condition3_holds = out.tropicalization.fan_status.ok();
  for (const auto& sc : out.tropicalization.cones) {
    out.all_strictly_simplicial = out.all_strictly_simplicial && sc.strictly_simplicial;
    for (const auto& pivot : sc.stratum) {
      auto m = check_condition2(data, sc.stratum, pivot);
      if (!m) out.condition2_holds = false;
      out.condition2.push_back(Condition2Entry{sc.stratum, pivot, std::move(m)});
    }
  }
  return out;
}

HubschReport hubsch_check(const Fan& fan) {
  HubschReport out{{}, coarsen(fan)};
  const std::size_t n = fan.ambient_rank();
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const Cone& sigma = fan.cones()[i];
    const LatticeQuotient q = lattice_quotient(sigma.generators(), n);
    HubschConeReport r{i, q.quotient_rank(), {}};
    if (q.quotient_rank() > 0) r.translation = support_translation_space(projected_star(fan, sigma, q));
    if (!r.translation.empty()) out.stars_rigid = false;
    out.cones.push_back(std::move(r));
  }
  out.input_is_fixpoint = out.coarsening.merges == 0;
  if (!out.stars_rigid)
    out.verdict = HubschVerdict::Fail;
  else
    out.verdict = out.input_is_fixpoint ? HubschVerdict::Pass : HubschVerdict::Undetermined;
  return out;
}

std::string to_string(HubschVerdict v) {
  switch (v) {
    case HubschVerdict::Pass:
      return "PASS";
    case HubschVerdict::Fail:
      return "FAIL";
    case HubschVerdict::Undetermined:
      return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

}  // namespace tropkit
