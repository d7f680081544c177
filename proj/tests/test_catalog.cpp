#include <gtest/gtest.h>

#include <conwaykit/catalog.hpp>

#include "support.hpp"

using namespace conwaykit;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_catalog(testing_support::data_dir());
  return c;
}

const FamilyRecord& family(const std::string& id) {
  auto* f = catalog().find_family(id);
  if (!f) throw std::runtime_error("missing family " + id);
  return *f;
}

Diagram seed_diagram(const FamilyRecord& r) { return Diagram::from_pd(catalog().find_seed(r.seed)->diagram); }

Polynomial a(std::uint32_t j) { return var(j); }
VarIndex v(std::uint32_t j) { return VarIndex(j); }

std::size_t oracle_disagreements(const FamilyRecord& r) {
  auto d = seed_diagram(r);
  std::size_t bad = 0;
  for (auto& x : sampling_grid(r))
    if (!oracle_check(d, r, x).agree()) ++bad;
  return bad;
}

bool hard_failure(const FamilyReport& rep) {
  for (auto& c : rep.checks)
    if (!c.passed && c.severity == Severity::Hard) return true;
  return false;
}

}  // namespace

TEST(Catalog, Census) {
  auto& c = catalog();
  EXPECT_EQ(c.families.size(), 65u);
  EXPECT_EQ(c.seeds.size(), 16u);
  std::array<unsigned, 7> per_n{};
  for (auto& f : c.families) ++per_n[f.n];
  EXPECT_EQ(per_n, (std::array<unsigned, 7>{0, 1, 1, 2, 5, 12, 44}));
  EXPECT_NO_THROW(check_census(c));
}

TEST(Catalog, CensusMismatchIsReported) {
  auto c = catalog();
  c.families.pop_back();
  EXPECT_THROW(check_census(c), CensusMismatch);
}

TEST(Catalog, MissingDataDirectory) {
  EXPECT_THROW(load_catalog("/nonexistent/conwaykit"), DataError);
}

TEST(Catalog, TextFormRoundTripsByteForByte) {
  auto text = read_file(testing_support::data_dir() + "/catalog.txt");
  auto fams = parse_catalog(text);
  EXPECT_EQ(store_catalog(fams), text);
  EXPECT_EQ(fams.size(), 65u);
}

TEST(Catalog, JsonRoundTrip) {
  auto& fams = catalog().families;
  auto j = families_to_json(fams);
  auto back = families_from_json(nlohmann::json::parse(j.dump()));
  ASSERT_EQ(back.size(), fams.size());
  for (std::size_t i = 0; i < fams.size(); ++i) EXPECT_EQ(family_line(back[i]), family_line(fams[i]));
  EXPECT_THROW(families_from_json(nlohmann::json::array()), DataError);
  auto broken = j;
  broken["families"][0]["hand"] = "WX";
  EXPECT_THROW(families_from_json(broken), DataError);
}

TEST(Catalog, MalformedLinesAreRejected) {
  auto line = family_line(family("F2-1"));
  EXPECT_NO_THROW(parse_family_line(line, 1));
  auto swap = [&](const std::string& from, const std::string& to) {
    auto s = line;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  EXPECT_THROW(parse_family_line(swap("hand=CW", "hand=CX"), 3), ParseError);
  EXPECT_THROW(parse_family_line(swap("hand=CW", "hand=C"), 3), ParseError);
  EXPECT_THROW(parse_family_line(swap("n=2", "n=two"), 3), ParseError);
  EXPECT_THROW(parse_family_line(swap("\tfig=", "\tfigure="), 3), ParseError);
  try {
    parse_family_line(swap("cfun=[[1,[]]", "cfun=[[1,[0]]"), 7);
    FAIL() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 7u);
  }
}

TEST(Catalog, TaitGraphReproducesEveryCFunction) {
  for (auto& f : catalog().families) EXPECT_EQ(tait_cfunction(seed_diagram(f), f), f.cfunction) << f.id;
}

TEST(Catalog, MonomialCountsMatchSeedsAndCaptions) {
  for (auto& f : catalog().families) {
    auto* s = catalog().find_seed(f.seed);
    EXPECT_EQ(Natural(monomial_count(f.cfunction)), s->conway_number) << f.id;
    if (f.terms) {
      EXPECT_EQ(monomial_count(f.cfunction), *f.terms) << f.id;
    }
    EXPECT_TRUE(all_coefficients_one(f.cfunction)) << f.id;
    EXPECT_NE(parity_class(f.cfunction), Parity::Mixed) << f.id;
  }
}

TEST(Catalog, CaptionsExpandToTheCFunction) {
  for (auto& f : catalog().families) {
    if (f.id == "F6-41") continue;  // printed caption kept verbatim, see its erratum
    EXPECT_EQ(parse_polynomial(f.caption), f.cfunction) << f.id;
  }
}

TEST(Catalog, SplitsRecompose) {
  std::size_t with_split = 0;
  for (auto& f : catalog().families) {
    if (std::holds_alternative<std::monostate>(f.split)) continue;
    ++with_split;
    EXPECT_EQ(recompose(f.split), f.cfunction) << f.id;
  }
  EXPECT_GT(with_split, 50u);
}

TEST(Catalog, SymmetricThreeTanglePair) {
  auto p = compose_knot3(symmetric_tangle3_a(v(1), v(3), v(5)), symmetric_tangle3_b(v(2), v(4), v(6)));
  auto& f = family("F6-38");
  EXPECT_EQ(f.figure, "46");
  EXPECT_EQ(p, f.cfunction);
  EXPECT_EQ(monomial_count(p), 16u);
}

TEST(Catalog, PrintedErratumFailsTheOracle) {
  auto& f = family("F6-41");
  ASSERT_FALSE(f.erratum.empty());
  EXPECT_EQ(oracle_disagreements(f), 0u);
  auto printed = f;
  printed.cfunction = parse_polynomial(f.caption);
  EXPECT_NE(printed.cfunction, f.cfunction);
  EXPECT_GT(oracle_disagreements(printed), 0u);
}

TEST(Catalog, ReconstructedCaptionPassesTheOracle) {
  auto& f = family("F6-15");
  EXPECT_EQ(parse_polynomial(f.caption), f.cfunction);
  EXPECT_EQ(oracle_disagreements(f), 0u);
}

TEST(Catalog, DuplicatedFigureFamilies) {
  EXPECT_TRUE(equivalent_under_relabeling(family("F6-7").cfunction, family("F6-9").cfunction));
  EXPECT_FALSE(equivalent_under_relabeling(family("F6-7").cfunction, family("F6-8").cfunction));
}

TEST(Catalog, SamplingGrid) {
  auto g4 = sampling_grid(family("F4-3"));
  EXPECT_EQ(g4.size(), 81u);
  auto g6 = sampling_grid(family("F6-1"));
  EXPECT_EQ(g6.size(), 200u);
  EXPECT_EQ(sampling_grid(family("F6-1")), g6);
  for (auto& x : g6)
    for (auto& e : x) {
      EXPECT_GE(e, Natural(1));
      EXPECT_LE(e, Natural(4));
    }
}

TEST(Verify, EveryFamilyPasses) {
  std::vector<const FamilyRecord*> all;
  for (auto& f : catalog().families) all.push_back(&f);
  auto reps = verify_all(catalog(), all, {}, 4);
  ASSERT_EQ(reps.size(), all.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(reps[i].id, all[i]->id);
    EXPECT_TRUE(reps[i].passed()) << reps[i].id;
    auto* z = reps[i].find("zero-reduction");
    ASSERT_NE(z, nullptr);
    EXPECT_TRUE(z->passed) << reps[i].id << ": " << z->detail;
  }
}

TEST(Verify, ParallelRunKeepsOrderAndResults) {
  std::vector<const FamilyRecord*> some;
  for (auto& f : catalog().families)
    if (f.n <= 5) some.push_back(&f);
  auto one = verify_all(catalog(), some, {}, 1);
  auto many = verify_all(catalog(), some, {}, 8);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].id, many[i].id);
    ASSERT_EQ(one[i].checks.size(), many[i].checks.size());
    for (std::size_t k = 0; k < one[i].checks.size(); ++k) {
      EXPECT_EQ(one[i].checks[k].passed, many[i].checks[k].passed);
      EXPECT_EQ(one[i].checks[k].detail, many[i].checks[k].detail);
    }
  }
}

TEST(Verify, ZeroReductionNamesConnectedSums) {
  auto& c = catalog();
  EXPECT_EQ(identify_family(c, Polynomial(1)), "unknot");
  EXPECT_EQ(identify_family(c, a(1) * a(2) + 1), "F2-1");
  EXPECT_EQ(identify_family(c, a(4) + a(7)), "F1-1");
  EXPECT_EQ(identify_family(c, (a(1) * a(2) + 1) * a(3)), "F2-1 # F1-1");
  EXPECT_EQ(identify_family(c, Polynomial(2) * a(1)), std::nullopt);
  auto factors = disjoint_factors((a(1) * a(2) * a(3) + a(1) + a(3)) * (a(4) * a(5) + 1));
  EXPECT_EQ(factors.size(), 2u);
  EXPECT_EQ(disjoint_factors(a(1) * a(2) + a(2) * a(3) + a(3) * a(1)).size(), 1u);
}

TEST(VerifyProperty, MutatedRecordsFail) {
  testing_support::Rng rng(0x5EED);
  auto& fams = catalog().families;
  VerifyOptions opt;
  opt.caption = false;
  opt.stop_at_first_failure = true;
  for (int trial = 0; trial < 40; ++trial) {
    auto r = fams[rng.below(static_cast<unsigned>(fams.size()))];
    if (r.n < 2) continue;
    if (trial % 2 == 0) {
      // drop one monomial
      auto terms = r.cfunction.terms();
      auto it = terms.begin();
      std::advance(it, rng.below(static_cast<unsigned>(terms.size())));
      Polynomial p;
      for (auto& [m, c] : r.cfunction.terms())
        if (m != it->first) p.add_term(m, c);
      r.cfunction = p;
    } else {
      // replace one variable by another within a single monomial
      auto terms = r.cfunction.terms();
      Polynomial p;
      bool done = false;
      for (auto& [m, c] : terms) {
        Monomial mm = m;
        if (!done && !m.empty() && m.size() < r.n) {
          for (std::uint32_t k = 1; k <= r.n; ++k)
            if (std::find(m.begin(), m.end(), k) == m.end()) {
              mm[0] = k;
              std::sort(mm.begin(), mm.end());
              done = true;
              break;
            }
        }
        p.add_term(mm, c);
      }
      if (!done) continue;
      r.cfunction = p;
    }
    auto rep = verify_family(catalog(), r, opt);
    EXPECT_TRUE(hard_failure(rep)) << r.id << " trial " << trial;
  }
}

TEST(Enumeration, SmallSeeds) {
  auto& c = catalog();
  auto en = enumerate_families(Diagram::from_pd(c.find_seed("trefoil")->diagram), &c);
  EXPECT_EQ(en.colorings, 8u);
  EXPECT_EQ(en.candidates.size(), 2u);
  EXPECT_EQ(enumerate_families(Diagram::from_pd(c.find_seed("4_1")->diagram), &c).candidates.size(), 3u);
  EXPECT_EQ(enumerate_families(Diagram::from_pd(c.find_seed("solomon")->diagram), &c).candidates.size(), 2u);
}

TEST(Enumeration, EverySeedMatchesTheCatalog) {
  auto& c = catalog();
  std::set<std::string> matched;
  std::size_t unmatched = 0;
  for (auto& s : c.seeds) {
    auto en = enumerate_families(Diagram::from_pd(s.diagram), &c);
    EXPECT_EQ(en.candidates.size(), s.families) << s.name;
    for (auto& cand : en.candidates) {
      if (cand.catalog_ids.empty()) {
        ++unmatched;
        EXPECT_EQ(s.name, "6^3_1");
        EXPECT_EQ(monomial_count(cand.cfunction), 12u);
      }
      matched.insert(cand.catalog_ids.begin(), cand.catalog_ids.end());
    }
  }
  EXPECT_EQ(matched.size(), c.families.size());
  EXPECT_EQ(unmatched, 1u);
}

TEST(CanonicalFormProperty, InvariantUnderRelabeling) {
  testing_support::Rng rng(0xCA7);
  auto& fams = catalog().families;
  for (int trial = 0; trial < 100; ++trial) {
    auto& f = fams[rng.below(static_cast<unsigned>(fams.size()))];
    std::vector<std::uint32_t> perm(f.n);
    std::iota(perm.begin(), perm.end(), 1u);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(static_cast<unsigned>(i))]);
    std::map<std::uint32_t, std::uint32_t> sigma;
    for (std::uint32_t k = 1; k <= f.n; ++k) sigma[k] = perm[k - 1];
    auto q = relabel(f.cfunction, sigma);
    EXPECT_EQ(canonical_form(q), canonical_form(f.cfunction)) << f.id;
    EXPECT_EQ(identify_family(catalog(), q).value_or(""), f.id == "F6-9" ? "F6-7" : f.id);
  }
}
