// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "bmwf/contraction.hpp"
#include "bmwf/fusion.hpp"
#include "bmwf/suites.hpp"

using namespace bmwf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void absorb(const SuiteReport& r) {
    require(r.pass(), r.name + ": " + std::to_string(r.failures) + "/" + std::to_string(r.checks) +
                          " failed, first " + r.first_failure);
    checks += r.checks;
  }
  long checks = 0;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d. %s (%.2fs%s%s)\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.checks ? (", " + std::to_string(o.checks) + " checks").c_str() : "",
              o.pass ? "" : ("; " + o.detail).c_str());
  std::fflush(stdout);
}

const ParamSet& P() {
  static const ParamSet p = make_params(kDefaultQ, kDefaultNu, 5);
  return p;
}

std::shared_ptr<const RationalContext> context(int n) {
  static std::vector<std::shared_ptr<const RationalContext>> cache(7);
  auto& c = cache[static_cast<std::size_t>(n)];
  if (!c) c = std::make_shared<const RationalContext>(n, rational_scalars(P()));
  return c;
}

struct System {
  std::vector<UpDownTableau> tabs;
  std::vector<Idempotent> fusion, jm;
};

const System& system_for(int n) {
  static std::vector<std::unique_ptr<System>> cache(7);
  auto& s = cache[static_cast<std::size_t>(n)];
  if (!s) {
    s = std::make_unique<System>();
    s->tabs = enumerate_tableaux(n);
    for (const auto& t : s->tabs) {
      s->fusion.push_back(fusion_idempotent(*context(n), P(), t));
      s->jm.push_back(jm_oracle_idempotent(*context(n), P(), t));
    }
  }
  return *s;
}

std::string single_row(int n) {
  std::string s;
  for (int k = 1; k <= n; ++k) s += (k > 1 ? ";" : "") + std::to_string(k);
  return s;
}

std::string single_column(int n) {
  std::string s, col;
  for (int k = 1; k <= n; ++k) {
    col += (k > 1 ? ",1" : "1");
    s += (k > 1 ? ";" : "") + col;
  }
  return s;
}

Outcome complete_system(int n, long expected_count) {
  Outcome o;
  const auto& ctx = *context(n);
  const auto& s = system_for(n);
  o.require(expected_count < 0 || static_cast<long>(s.tabs.size()) == expected_count,
            "tableau count " + std::to_string(s.tabs.size()));
  RElement sum(ctx);
  for (std::size_t a = 0; a < s.tabs.size(); ++a) {
    const auto& E = s.fusion[a].element;
    std::string tag = " n=" + std::to_string(n) + " U=" + encode_tableau(s.tabs[a]);
    o.require(E * E == E, "E^2 != E" + tag);
    for (int j = 1; j <= n; ++j)
      o.require(jm_element(ctx, j) * E == E.scaled(s.fusion[a].contents[static_cast<std::size_t>(j - 1)]),
                "y_j eigenvalue" + tag);
    for (std::size_t b = 0; b < s.tabs.size(); ++b)
      if (a != b) o.require((E * s.fusion[b].element).is_zero(), "not orthogonal" + tag);
    sum += E;
    o.checks += static_cast<long>(s.tabs.size()) + n;
  }
  o.require(sum == unit(ctx), "sum != 1 at n=" + std::to_string(n));
  ++o.checks;
  return o;
}

RElement random_element(const RationalContext& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> b(0, c.dim() - 1);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  RElement e(c);
  for (int k = 0; k < 3; ++k) e.add_term(b(rng), Rational(num(rng), den(rng)));
  return e;
}

long double_factorial_odd(int n) {
  long r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int k = 1; k < argc; ++k)
    if (std::strcmp(argv[k], "--stretch") == 0) stretch = true;

  criterion(1, "BMW_2 closed forms S, A, Pi from fusion, exact, under 1 s", [] {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto p = make_params(kDefaultQ, kDefaultNu, 2);
    RationalContext c(2, rational_scalars(p));
    Rational q = p.q, nu = p.nu, qi = q.inverse(), z = q - qi;
    auto one = unit(c);
    auto T = gen_T(c, 1), K = gen_K(c, 1);
    RElement S = (T + one.scaled(qi) + K.scaled(z / (1 - q / nu))).scaled((q + qi).inverse());
    RElement A = (T - one.scaled(q) + K.scaled(z / (1 + qi / nu))).scaled(-(q + qi).inverse());
    RElement Pi = K.scaled(p.mu.inverse());
    o.require(fusion_idempotent(c, p, parse_tableau("1;2")).element == S, "S");
    o.require(fusion_idempotent(c, p, parse_tableau("1;1,1")).element == A, "A");
    o.require(fusion_idempotent(c, p, parse_tableau("1;")).element == Pi, "Pi");
    o.checks = 3;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
    return o;
  });

  criterion(2, "complete systems n = 2, 3, 4 (3, 7, 25 tableaux), exact", [] {
    Outcome o;
    const long counts[] = {0, 0, 3, 7, 25};
    for (int n = 2; n <= 4; ++n) {
      auto r = complete_system(n, counts[n]);
      o.require(r.pass, r.detail);
      o.checks += r.checks;
    }
    return o;
  });

  if (stretch)
    criterion(2, "stretch: complete system n = 5, orthogonality from two-sided JM eigenvalues", [] {
      // With y_j E = c_j E and E y_j = c_j E, E_U y_j E_V is both c_j(U) E_U E_V and
      // c_j(V) E_U E_V, so distinct content sequences force E_U E_V = 0.
      Outcome o;
      const int n = 5;
      const auto& ctx = *context(n);
      const auto& s = system_for(n);
      RElement sum(ctx);
      std::set<std::vector<Rational>> seen;
      for (std::size_t a = 0; a < s.tabs.size(); ++a) {
        const auto& E = s.fusion[a].element;
        const auto& cs = s.fusion[a].contents;
        std::string tag = " U=" + encode_tableau(s.tabs[a]);
        o.require(E == s.jm[a].element, "fusion != jm oracle" + tag);
        o.require(E * E == E, "E^2 != E" + tag);
        for (int j = 1; j <= n; ++j) {
          auto y = jm_element(ctx, j);
          const auto& c = cs[static_cast<std::size_t>(j - 1)];
          o.require(y * E == E.scaled(c) && E * y == E.scaled(c), "two-sided y_j eigenvalue" + tag);
        }
        o.require(seen.insert(cs).second, "repeated content sequence" + tag);
        sum += E;
        o.checks += 3 + n;
      }
      o.require(sum == unit(ctx), "sum != 1");
      ++o.checks;
      return o;
    });

  criterion(3, "fusion idempotents equal the Jucys-Murphy oracle, n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const auto& s = system_for(n);
      for (std::size_t a = 0; a < s.tabs.size(); ++a, ++o.checks)
        o.require(s.fusion[a].element == s.jm[a].element, "n=" + std::to_string(n) + " U=" + encode_tableau(s.tabs[a]));
    }
    return o;
  });

  criterion(4, "(anti)symmetrizers: chain = Y-product = fusion, n <= 4", [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
      const auto& c = *context(n);
      auto S = symmetrizer_chain(c, P());
      auto A = antisymmetrizer_chain(c, P());
      std::string tag = " n=" + std::to_string(n);
      o.require(S == symmetrizer_yproduct(c, P()), "S chain != Y-product" + tag);
      o.require(A == antisymmetrizer_yproduct(c, P()), "A chain != Y-product" + tag);
      o.require(S == fusion_idempotent(c, P(), parse_tableau(single_row(n))).element, "S != fusion" + tag);
      o.require(A == fusion_idempotent(c, P(), parse_tableau(single_column(n))).element, "A != fusion" + tag);
      o.checks += 4;
      for (int i = 1; i < n; ++i) {
        auto Ti = gen_T(c, i), Ki = gen_K(c, i);
        o.require(A * Ti == A.scaled(-P().q.inverse()) && Ti * A == A.scaled(-P().q.inverse()), "A T_i" + tag);
        o.require(S * Ti == S.scaled(P().q) && Ti * S == S.scaled(P().q), "S T_i" + tag);
        o.require((Ki * A).is_zero() && (Ki * S).is_zero(), "kappa_i kills" + tag);
        o.checks += 3;
      }
    }
    return o;
  });

  criterion(5, "baxterized and reflection identities at 10 seeded tuples each, n <= 4", [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
      o.absorb(suite_baxter(n, P(), 100 + static_cast<std::uint64_t>(n)));
      o.absorb(suite_reflection(n, P(), 200 + static_cast<std::uint64_t>(n)));
    }
    return o;
  });

  criterion(6, "Hecke family idempotents: c-independent and equal to the BMW quotient, n <= 4", [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) o.absorb(suite_hecke(n, P()));
    return o;
  });

  criterion(7, "contraction: block limits, Brauer structure constants, Brauer idempotents", [] {
    Outcome o;
    o.absorb(suite_contraction(3, Rational(7, 2), 7));
    return o;
  });

  criterion(8, "structural counts n <= 5 and associativity on 100 triples per algebra", [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      std::string tag = " n=" + std::to_string(n);
      o.require(context(n)->dim() == double_factorial_odd(n), "BMW dimension" + tag);
      o.require(static_cast<long>(enumerate_brauer_diagrams(n).size()) == double_factorial_odd(n), "Brauer count" + tag);
      long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      o.require(static_cast<long>(all_perms(n).size()) == fact, "Hecke count" + tag);
      o.checks += 3;
    }
    std::mt19937_64 rng(8);
    for (int it = 0; it < 100; ++it, ++o.checks) {
      const auto& c = *context(2 + it % 3);
      auto a = random_element(c, rng), b = random_element(c, rng), d = random_element(c, rng);
      o.require((a * b) * d == a * (b * d), "BMW associativity");
    }
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int it = 0; it < 100; ++it, ++o.checks) {
      int n = 2 + it % 3;
      auto ds = enumerate_brauer_diagrams(n);
      std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
      Rational omega(3, 2);
      auto rnd = [&] {
        BrauerElement e(n, omega);
        for (int k = 0; k < 3; ++k) e.add_term(ds[pick(rng)], Rational(num(rng), den(rng)));
        return e;
      };
      auto a = rnd(), b = rnd(), d = rnd();
      o.require((a * b) * d == a * (b * d), "Brauer associativity");
    }
    Rational z = P().q - P().q.inverse();
    for (int it = 0; it < 100; ++it, ++o.checks) {
      int n = 2 + it % 3;
      auto ps = all_perms(n);
      std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
      auto rnd = [&] {
        HElement e(n, z);
        for (int k = 0; k < 3; ++k) e.add_term(ps[pick(rng)], Rational(num(rng), den(rng)));
        return e;
      };
      auto a = rnd(), b = rnd(), d = rnd();
      o.require((a * b) * d == a * (b * d), "Hecke associativity");
    }
    return o;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
