#include "cjac/survey.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "cjac/classifier.hpp"
#include "cjac/lattice.hpp"

namespace cjac {

std::vector<NumericalSemigroup> semigroups_up_to(int v0_max) {
  std::vector<NumericalSemigroup> out;
  std::vector<NumericalSemigroup> stack{NumericalSemigroup()};
  while (!stack.empty()) {
    NumericalSemigroup s = std::move(stack.back());
    stack.pop_back();
    for (int g : s.generators()) {
      if (g < s.conductor() || g + 1 > v0_max) continue;
      std::vector<int> members = s.smalls();
      for (int x = s.conductor(); x < g; ++x) members.push_back(x);
      stack.push_back(NumericalSemigroup::from_value_set(ValueSet::from_elements(members, g + 1)));
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return a.generators() < b.generators();
  });
  return out;
}

std::string survey_header() {
  return "generators,v0,delta,gamma,gorenstein,gorenstein_prime,multiplicity_condition,rank_M_mod_C,rank_M_mod_tC,"
         "remark_0_6_ok,E_size,Filt_size,E_equals_Filt,Filt_equals_Kbar,lemma_3_4_computed,lemma_3_4_predicted,"
         "planar,v0_eq_2delta_minus_1,conductor_drop,iso_classes";
}

std::string survey_row(const NumericalSemigroup& s, bool search) {
  const auto b = [](bool x) { return x ? "1" : "0"; };
  const bool natural = s.is_natural();
  const int rank_c = natural ? 0 : rank_M_mod(s, ConductorIdeal::C);
  const int rank_tc = natural ? 0 : rank_M_mod(s, ConductorIdeal::tC);
  const bool mult = multiplicity_condition(s);
  const bool remark = (rank_tc == 1) == mult && mult == smalls_are_multiples(s);

  const auto members = enumerate_E(s, s.delta());
  int filt = 0;
  bool all_reached = true;
  ClassifierOptions options;
  options.search = search;
  const bool proved = s.gamma() <= 1 || rank_c == 1;
  for (const auto& d : members) {
    if (!in_filt(s, d)) continue;
    ++filt;
    if (proved || !all_reached) continue;
    const auto st = kbar_status(s, d, options).status;
    all_reached = st == KStatus::Witnessed || st == KStatus::TheoremBacked;
  }
  std::string kbar = "Proved";
  if (!proved) kbar = all_reached ? "AllWitnessed" : (search ? "CounterexampleEvidence" : "Unsearched");

  const auto l34 = lemma_3_4(s);
  const auto l35 = lemma_3_5_and_3_1(s);
  std::ostringstream os;
  os << '"' << s.to_string() << '"' << ',' << s.conductor() << ',' << s.delta() << ',' << s.gamma() << ','
     << b(is_gorenstein(s)) << ',' << (natural ? "" : b(is_gorenstein(partial_normalization(s)))) << ',' << b(mult)
     << ',' << rank_c << ',' << rank_tc << ',' << b(remark) << ',' << members.size() << ',' << filt << ','
     << b(static_cast<int>(members.size()) == filt) << ',' << kbar << ',' << b(l34.computed) << ','
     << b(l34.predicted) << ',' << b(l35.planar) << ',' << b(l35.v0_is_2delta_minus_1) << ',' << l35.conductor_drop
     << ',' << iso_classes(s).size();
  return os.str();
}

std::string survey_csv(const SurveyOptions& options) {
  const auto all = semigroups_up_to(options.v0_max);
  std::vector<std::string> rows(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < all.size(); i = next++) rows[i] = survey_row(all[i], options.search);
  };
  const int threads = std::max(options.threads, 1);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::string out = survey_header() + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace cjac
