#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "easyq/category.hpp"
#include "easyq/enumerate.hpp"
#include "easyq/group.hpp"
#include "easyq/hyperspherical.hpp"
#include "easyq/integration.hpp"
#include "easyq/laws.hpp"
#include "easyq/monomial.hpp"
#include "easyq/oracle/enumeration.hpp"
#include "easyq/oracle/monte_carlo.hpp"
#include "easyq/oracle/weyl.hpp"
#include "easyq/temperley_lieb.hpp"
#include "easyq/tensor_map.hpp"
#include "easyq/weingarten.hpp"

namespace easyq::cli {

namespace {

using Checks = std::vector<CheckResult>;

struct Section {
  std::string name;
  std::function<void(Checks&, bool)> run;
};

void record(Checks& out, std::string const& section, std::string name, bool passed, std::string detail = {}) {
  out.push_back({section, std::move(name), passed, std::move(detail)});
}

// Monomials of the given degree with indices in 1..n, one per orbit under
// separate relabelings of the row and the column indices.
std::vector<MonomialSpec> orbit_monomials(std::size_t degree, long n, bool colored) {
  std::vector<MonomialSpec> out;
  std::vector<int> rows(degree), cols(degree);
  auto rec = [&](auto&& self, std::size_t pos, int row_max, int col_max) -> void {
    if (pos == degree) {
      std::size_t const words = colored ? (std::size_t{1} << degree) : 1;
      for (std::size_t w = 0; w < words; ++w) {
        MonomialSpec m;
        for (std::size_t k = 0; k < degree; ++k)
          m.factors.push_back({rows[k], cols[k], (w >> k) & 1 ? Color::black : Color::white});
        out.push_back(std::move(m));
      }
      return;
    }
    for (int r = 1; r <= std::min<long>(row_max + 1, n); ++r) {
      for (int c = 1; c <= std::min<long>(col_max + 1, n); ++c) {
        rows[pos] = r;
        cols[pos] = c;
        self(self, pos + 1, std::max(row_max, r), std::max(col_max, c));
      }
    }
  };
  rec(rec, 0, 0, 0);
  return out;
}

void pairings(Checks& out, bool quick) {
  std::size_t const bound = quick ? 4 : 6;
  struct Case {
    char const* name;
    std::vector<Partition> generators;
    CategoryId expected;
  };
  std::vector<Case> const cases = {
      {"NC2", {}, CategoryId::NC2},
      {"P2*", {half_classical_crossing(Color::white, Color::white, Color::white)}, CategoryId::P2_star},
      {"P2", {crossing(Color::white, Color::white)}, CategoryId::P2},
  };
  for (auto const& c : cases) {
    auto const cat = closure(c.generators, bound, Regime::uncolored);
    bool same = true;
    std::size_t count = 0;
    for (std::size_t k = 0; k <= bound; ++k) {
      for (std::size_t l = 0; k + l <= bound; ++l) {
        auto const upper = white_word(k);
        auto const lower = white_word(l);
        std::vector<Partition> got;
        for (auto const& p : cat->members(upper, lower))
          if (is_pairing(p)) got.push_back(p);
        auto const want = category_set(CategorySpec::named(c.expected), upper, lower);
        same = same && got == want;
        count += want.size();
      }
    }
    record(out, "pairings", std::string("closure equals ") + c.name, same, std::to_string(count) + " pairings");
  }
}

void functoriality(Checks& out, bool quick) {
  std::size_t const legs = quick ? 2 : 3;
  std::vector<Partition> all;
  for (std::size_t k = 0; k <= legs; ++k)
    for (std::size_t l = 0; l <= legs; ++l)
      for (auto const& p : enumerate(white_word(k), white_word(l))) all.push_back(p);
  for (bool twisted : {false, true}) {
    std::vector<Partition> pool;
    for (auto const& p : all)
      if (!twisted || has_even_blocks(p)) pool.push_back(p);
    for (long n : {2L, 3L}) {
      std::size_t pairs = 0;
      std::string failure;
      for (auto const& p : pool) {
        for (auto const& q : pool) {
          auto const r = verify_functoriality(p, q, n, twisted);
          ++pairs;
          if (!r.ok() && failure.empty()) failure = r.defects.front();
        }
      }
      record(out, "functoriality", std::string(twisted ? "twisted" : "plain") + " N=" + std::to_string(n),
             failure.empty(), failure.empty() ? std::to_string(pairs) + " pairs" : failure);
    }
  }
}

void mobius_section(Checks& out, bool quick) {
  std::size_t const legs = quick ? 2 : 4;
  for (long n : {2L, 3L}) {
    std::size_t count = 0;
    std::string failure;
    for (std::size_t k = 0; k <= legs; ++k) {
      for (std::size_t l = 0; k + l <= legs; ++l) {
        for (auto const& p : enumerate(white_word(k), white_word(l), Filter::even_blocks)) {
          auto const r = mobius_expansion_check(p, n);
          ++count;
          if (!r.holds && failure.empty()) failure = p.to_string();
        }
      }
    }
    record(out, "mobius", "expansion N=" + std::to_string(n), failure.empty(),
           failure.empty() ? std::to_string(count) + " partitions" : "fails at " + failure);
  }
}

void sn_section(Checks& out, bool quick) {
  std::vector<long> const sizes = quick ? std::vector<long>{4} : std::vector<long>{4, 5, 6};
  std::size_t const degree = quick ? 3 : 4;
  for (long n : sizes) {
    HaarIntegrator integrator({GroupId::S, false}, n);
    std::size_t count = 0;
    std::string failure;
    for (std::size_t d = 1; d <= degree; ++d) {
      for (auto const& m : orbit_monomials(d, n, false)) {
        ++count;
        if (integrator.moment(m) != oracle::sn_haar_moment(n, m) && failure.empty()) failure = format_monomial(m);
      }
    }
    record(out, "sn", "S_N enumeration N=" + std::to_string(n), failure.empty(),
           failure.empty() ? std::to_string(count) + " monomials" : failure);
  }
}

void hns_section(Checks& out, bool quick) {
  std::vector<long> const sizes = quick ? std::vector<long>{3} : std::vector<long>{3, 4};
  std::size_t const degree = quick ? 3 : 4;
  for (long n : sizes) {
    HaarIntegrator integrator({GroupId::H, false}, n);
    std::size_t count = 0;
    std::string failure;
    for (std::size_t d = 1; d <= degree; ++d) {
      oracle::WreathMomentTable const table(n, 2, white_word(d));
      for (auto const& m : orbit_monomials(d, n, false)) {
        ++count;
        auto const rows = m.rows();
        auto const cols = m.cols();
        auto const want = table.moment(rows, cols);
        if ((!want.is_rational() || integrator.moment(m) != want.a()) && failure.empty())
          failure = format_monomial(m);
      }
    }
    record(out, "hns", "H_N enumeration N=" + std::to_string(n), failure.empty(),
           failure.empty() ? std::to_string(count) + " monomials" : failure);
  }
}

void mc_section(Checks& out, bool quick) {
  oracle::MCConfig cfg;
  cfg.samples = quick ? 20'000 : 1'000'000;
  std::vector<long> const sizes = quick ? std::vector<long>{3} : std::vector<long>{3, 4, 5};
  std::size_t const degree = quick ? 2 : 4;
  struct Pair {
    oracle::MCGroup sampled;
    GroupId exact;
  };
  for (auto const [sampled, exact] : {Pair{oracle::MCGroup::O, GroupId::O}, Pair{oracle::MCGroup::U, GroupId::U},
                                      Pair{oracle::MCGroup::B, GroupId::B}, Pair{oracle::MCGroup::C, GroupId::C}}) {
    bool const colored = !is_real(exact);
    for (long n : sizes) {
      HaarIntegrator integrator({exact, false}, n);
      std::vector<MonomialSpec> monomials;
      for (std::size_t d = 1; d <= degree; ++d)
        for (auto& m : orbit_monomials(d, n, colored)) monomials.push_back(std::move(m));
      cfg.seed = static_cast<std::uint64_t>(n);
      auto const est = oracle::mc_haar_moments(sampled, n, monomials, cfg);
      double worst = 0;
      std::string failure;
      for (std::size_t k = 0; k < monomials.size(); ++k) {
        double const want = to_double(integrator.moment(monomials[k]));
        double const tol = est[k].std_error > 0 ? 4 * est[k].std_error : 1e-12;
        double const err = std::abs(est[k].mean - want);
        worst = std::max(worst, est[k].std_error > 0 ? err / est[k].std_error : 0.0);
        double const imag_tol = est[k].imag_std_error > 0 ? 4 * est[k].imag_std_error : 1e-12;
        if ((err > tol || std::abs(est[k].imag_mean) > imag_tol) && failure.empty())
          failure = format_monomial(monomials[k]);
      }
      std::ostringstream detail;
      detail << monomials.size() << " monomials, max deviation " << worst << " sigma";
      record(out, "mc", std::string(oracle::mc_group_name(sampled)) + "_N N=" + std::to_string(n), failure.empty(),
             failure.empty() ? detail.str() : failure);
    }
  }
}

void derangements(Checks& out, bool quick) {
  long const top = quick ? 6 : 8;
  for (long n = 1; n <= top; ++n) {
    auto const law = oracle::sn_truncated_char_law(n, 1);
    record(out, "derangements", "N=" + std::to_string(n), law.front() == derangement_probability(n));
  }
  double const gap = std::abs(to_double(derangement_probability(8)) - std::exp(-1.0));
  record(out, "derangements", "distance to 1/e at N=8", gap <= 1e-4, std::to_string(gap));
}

void characters(Checks& out, bool quick) {
  long const n = quick ? 5 : 7;
  unsigned const kmax = quick ? 3 : 4;
  for (long s : {3L, n}) {
    Rational t(s, n);
    t.canonicalize();
    bool ok = true;
    for (unsigned k = 1; k <= kmax; ++k)
      ok = ok && oracle::sn_truncated_char_moment(n, t, k) ==
                     truncated_char_moment({GroupId::S, false}, n, s, white_word(k));
    record(out, "characters", "S_N s=" + std::to_string(s) + " N=" + std::to_string(n), ok);
  }
}

void free_characters(Checks& out, bool quick) {
  std::size_t const kmax = quick ? 4 : 6;
  std::vector<long> const sizes = quick ? std::vector<long>{4} : std::vector<long>{4, 5, 6, 7, 8};
  for (auto const g : {GroupId::O_plus, GroupId::S_plus, GroupId::H_plus}) {
    bool ok = true;
    for (long n : sizes) {
      for (std::size_t k = 1; k <= kmax; ++k) {
        auto const count = category_set(group_category(g), {}, white_word(k)).size();
        ok = ok && truncated_char_moment({g, false}, n, n, white_word(k)) == Rational(static_cast<long>(count));
      }
    }
    record(out, "free-characters", std::string(group_symbol(g)) + " moments count the category", ok);
  }
}

void hyperspherical(Checks& out, bool quick) {
  long const lmax = quick ? 2 : 3;
  for (long n : {4L, 5L, 6L}) {
    bool ok = true;
    for (long l = 1; l <= lmax; ++l) ok = ok && free_hyperspherical_moment({n, l}).agrees;
    record(out, "hyperspherical", "N=" + std::to_string(n), ok);
  }
}

void spheres(Checks& out, bool quick) {
  oracle::MCConfig cfg;
  cfg.samples = quick ? 20'000 : 1'000'000;
  std::vector<long> const sizes = quick ? std::vector<long>{3} : std::vector<long>{3, 4, 5};
  for (long n : sizes) {
    std::vector<std::vector<int>> tuples;
    for (std::size_t d = 1; d <= 4; ++d) {
      for (auto const& m : orbit_monomials(d, n, false)) {
        auto const rows = m.rows();
        if (std::is_sorted(rows.begin(), rows.end())) tuples.push_back(rows);
      }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    cfg.seed = 100 + static_cast<std::uint64_t>(n);
    auto const est = oracle::sphere_mc_moments(n, tuples, cfg);
    bool ok = true;
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      double const want = to_double(sphere_moment(SphereKind::real, tuples[k], n));
      double const tol = est[k].std_error > 0 ? 4 * est[k].std_error : 1e-12;
      ok = ok && std::abs(est[k].mean - want) <= tol;
    }
    record(out, "spheres", "real sphere N=" + std::to_string(n), ok, std::to_string(tuples.size()) + " monomials");
  }
  long const big = 64;
  Integer catalan = 1;
  bool ok = true;
  for (long l = 1; l <= 3; ++l) {
    catalan = catalan * 2 * (2 * l - 1) / (l + 1);
    double const scaled =
        std::pow(static_cast<double>(big), static_cast<double>(l)) *
        to_double(sphere_moment(SphereKind::real_free, std::vector<int>(static_cast<std::size_t>(2 * l), 1), big));
    ok = ok && std::abs(scaled / catalan.get_d() - 1.0) <= 0.15;
  }
  record(out, "spheres", "free sphere scaling at N=64", ok);
}

void temperley_lieb(Checks& out, bool quick) {
  std::size_t const kmax = quick ? 4 : 6;
  for (auto const& delta : {Rational(2), Rational(3), Rational(7, 2)}) {
    bool ok = true;
    for (std::size_t k = 2; k <= kmax; ++k) {
      for (std::size_t i = 1; i < k; ++i) {
        auto const e = jones_generator(i, k, delta);
        ok = ok && e * e == e && tl_adjoint(e) == e;
        if (i + 1 < k) {
          auto const f = jones_generator(i + 1, k, delta);
          Rational const inv = 1 / (delta * delta);
          ok = ok && e * f * e == e * inv && f * e * f == f * inv;
        }
        for (std::size_t j = i + 2; j < k; ++j) {
          auto const f = jones_generator(j, k, delta);
          ok = ok && e * f == f * e;
        }
      }
      if (k + 1 <= kmax) {
        auto const next = jones_generator(k, k + 1, delta);
        for (auto const& d : tl_basis(k)) {
          auto const w = TLElement::diagram(d, delta);
          ok = ok && markov_trace(tl_embed(w) * next) == markov_trace(w) / (delta * delta);
        }
      }
    }
    record(out, "temperley-lieb", "Jones and Markov, delta=" + to_string(delta), ok);
  }
  std::size_t const dmax = quick ? 6 : 8;
  bool ok = true;
  Integer catalan = 1;
  for (std::size_t k = 1; k <= dmax; ++k) {
    catalan = catalan * 2 * (2 * k - 1) / (k + 1);
    ok = ok && Integer(static_cast<unsigned long>(tl_dimension(k))) == catalan;
  }
  record(out, "temperley-lieb", "dimensions are Catalan", ok);
}

void weyl(Checks& out, bool quick) {
  int const count = quick ? 10 : 100;
  for (long n : {2L, 3L}) {
    double worst = 0;
    bool ok = true;
    for (int trial = 0; trial < count; ++trial) {
      auto rng = oracle::block_stream(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
      auto const model = oracle::weyl_model(n, oracle::haar_unitary(n, rng));
      ok = ok && model.report.ok(1e-10);
      worst = std::max({worst, model.report.relations, model.report.magic()});
    }
    std::ostringstream detail;
    detail << count << " unitaries, worst residual " << worst;
    record(out, "weyl", "relations and magic n=" + std::to_string(n), ok, detail.str());
  }
  double const pauli = oracle::pauli_residual(oracle::weyl_matrices(2));
  record(out, "weyl", "Pauli family", pauli <= 1e-12);
}

void stationarity(Checks& out, bool quick) {
  oracle::MCConfig cfg;
  cfg.samples = quick ? 20'000 : 1'000'000;
  auto const t1 = oracle::stationarity_matrix(2, 1, {Color::white}, cfg);
  bool constant = true;
  for (long r = 0; r < t1.t.rows(); ++r)
    for (long c = 0; c < t1.t.cols(); ++c) constant = constant && t1.t(r, c) == std::complex<double>(0.25, 0);
  record(out, "stationarity", "T_1 idempotent", constant && t1.residual == 0);
  auto const t2 = oracle::stationarity_matrix(2, 2, {Color::white, Color::white}, cfg);
  record(out, "stationarity", "T_2 idempotent within 1e-2", t2.residual <= 1e-2, std::to_string(t2.residual));
}

void isometries(Checks& out, bool quick) {
  std::size_t const degree = quick ? 2 : 4;
  for (long n : {3L, 4L}) {
    struct Family {
      IsometryFamily family;
      GroupId group;
    };
    for (auto const [family, group] : {Family{IsometryFamily::O, GroupId::O}, Family{IsometryFamily::U, GroupId::U},
                                       Family{IsometryFamily::H, GroupId::H}}) {
      auto const spec = isometry_spec(family, n, n, n);
      bool ok = true;
      for (std::size_t d = 1; d <= degree; ++d)
        for (auto const& m : orbit_monomials(d, n, family == IsometryFamily::U))
          ok = ok && partial_isometry_moment(spec, m) == haar_moment({group, false}, m, n);
      record(out, "isometries", std::string(group_symbol(group)) + " at L=M=N=" + std::to_string(n), ok);
    }
  }
  for (long n : {3L, 4L}) {
    auto const spec = isometry_spec(IsometryFamily::O, 1, n, 1);
    bool ok = true;
    for (std::size_t d = 1; d <= degree; ++d) {
      for (auto const& m : orbit_monomials(d, n, false)) {
        MonomialSpec row = m;
        for (auto& f : row.factors) f.i = 1;
        ok = ok && partial_isometry_moment(spec, row, true) == sphere_moment(SphereKind::real, row.cols(), n);
      }
    }
    record(out, "isometries", "sphere at L=M=1, N=" + std::to_string(n), ok);
  }
  std::vector<long> const sizes = quick ? std::vector<long>{10, 20} : std::vector<long>{10, 20, 30};
  Rational const target(1, 4);
  Rational previous = -1;
  bool ok = true;
  std::ostringstream detail;
  for (long n : sizes) {
    auto const spec = isometry_spec(IsometryFamily::O, n, n, n / 2);
    Rational err = nonoverlapping_sum_moment(spec, n / 2, white_word(2)) - target;
    if (err < 0) err = -err;
    if (previous >= 0) ok = ok && err <= previous;
    previous = err;
    detail << "N=" << n << " error " << to_string(err) << "; ";
  }
  record(out, "isometries", "non-overlapping sum moment tends to 1/4", ok, detail.str());
}

void axioms(Checks& out, bool quick) {
  std::size_t const bound = quick ? 4 : 5;
  for (auto id : {CategoryId::P, CategoryId::NC, CategoryId::P2, CategoryId::NC2, CategoryId::P_even,
                  CategoryId::NC_even, CategoryId::P2_star, CategoryId::P12, CategoryId::NC12}) {
    auto const report = verify_axioms(CategorySpec::named(id), bound, Regime::uncolored);
    record(out, "axioms", std::string(category_name(id)), report.ok(),
           report.ok() ? std::to_string(report.checked_operations) + " operations" : report.defects.front());
  }
  for (auto id : {CategoryId::Mcal_P2, CategoryId::Mcal_NC2, CategoryId::Mcal_P12}) {
    auto const report = verify_axioms(CategorySpec::named(id), quick ? 3 : 4, Regime::colored);
    record(out, "axioms", std::string(category_name(id)), report.ok(),
           report.ok() ? std::to_string(report.checked_operations) + " operations" : report.defects.front());
  }
}

std::vector<Section> const& sections() {
  static std::vector<Section> const table = {
      {"axioms", axioms},
      {"pairings", pairings},
      {"functoriality", functoriality},
      {"mobius", mobius_section},
      {"sn", sn_section},
      {"hns", hns_section},
      {"mc", mc_section},
      {"derangements", derangements},
      {"characters", characters},
      {"free-characters", free_characters},
      {"hyperspherical", hyperspherical},
      {"spheres", spheres},
      {"temperley-lieb", temperley_lieb},
      {"weyl", weyl},
      {"stationarity", stationarity},
      {"isometries", isometries},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_sections() {
  std::vector<std::string> names;
  for (auto const& s : sections()) names.push_back(s.name);
  return names;
}

std::vector<CheckResult> run_verification(std::vector<std::string> const& requested, bool quick) {
  bool const everything = std::find(requested.begin(), requested.end(), "all") != requested.end();
  for (auto const& name : requested) {
    if (name == "all") continue;
    auto const names = verify_sections();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw std::invalid_argument("unknown verification section '" + name + "'");
  }
  Checks out;
  for (auto const& s : sections()) {
    if (!everything && std::find(requested.begin(), requested.end(), s.name) == requested.end()) continue;
    try {
      s.run(out, quick);
    } catch (std::exception const& e) {
      record(out, s.name, "section aborted", false, e.what());
    }
  }
  return out;
}

}  // namespace easyq::cli
