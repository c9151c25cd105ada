// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <cctype>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusion_exp/dlp.hpp"
#include "fusion_exp/protocols.hpp"
#include "fusion_exp/reductions.hpp"
#include "fusion_exp/symbolic.hpp"
#include "test_support.hpp"

using namespace fexp;

namespace {

// Thrown by `expect` to abort a criterion with a reason.
struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

// --- AC1 --------------------------------------------------------------------

using Matrix = std::vector<std::vector<std::string>>;

// The published matrices, transcribed verbatim.
const std::vector<Matrix>& published_matrices() {
  static const std::vector<Matrix> m{
      {{"y_0"}},
      {{"y_0", "-y_1"}, {"y_1", "y_0"}},
      {{"y_0", "-y_2", "-y_1"}, {"y_1", "y_0-y_2", "-y_2-y_1"}, {"y_2", "y_1", "y_0-y_2"}},
      {{"y_0", "-y_3", "-y_2", "-y_1"},
       {"y_1", "y_0-y_3", "-y_2-y_3", "-y_1-y_2"},
       {"y_2", "y_1", "y_0-y_3", "-y_2-y_3"},
       {"y_3", "y_2", "y_1", "y_0-y_3"}},
      {{"y_0", "-y_4", "-y_3", "-y_2", "-y_1+y_4"},
       {"y_1", "y_0", "-y_4", "-y_3", "-y_2"},
       {"y_2", "y_1-y_4", "y_0-y_3", "-y_2-y_4", "-y_1-y_3+y_4"},
       {"y_3", "y_2", "y_1-y_4", "y_0-y_3", "-y_4-y_2"},
       {"y_4", "y_3", "y_2", "y_1-y_4", "y_0-y_3"}},
  };
  return m;
}

// Parses "c*y_k" terms joined by + and -, e.g. "-y_1-y_3+y_4".
LinearForm parse_form(const std::string& text, std::size_t n) {
  LinearForm form(n, 0);
  std::size_t i = 0;
  while (i < text.size()) {
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      expect(text[i] == '*', "bad term in " + text);
      ++i;
    }
    expect(text.compare(i, 2, "y_") == 0, "bad term in " + text);
    i += 2;
    std::size_t k = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) k = k * 10 + (text[i++] - '0');
    expect(k < n, "index out of range in " + text);
    form[k] += sign * coeff;
  }
  return form;
}

// Coefficient of y_k in entry (i, j) is coefficient i of e_j * e_k, computed
// by schoolbook multiplication and long division.
std::vector<std::vector<LinearForm>> oracle_lambda(long q, const oracle::Vec& f_low) {
  const std::size_t n = f_low.size();
  std::vector<std::vector<LinearForm>> out(n, std::vector<LinearForm>(n, LinearForm(n, 0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      oracle::Vec ej(n, 0), ek(n, 0);
      ej[j] = 1;
      ek[k] = 1;
      const auto prod = oracle::mul_then_reduce(q, f_low, ej, ek);
      for (std::size_t i = 0; i < n; ++i) out[i][j][k] = prod[i] > q / 2 ? prod[i] - q : prod[i];
    }
  }
  return out;
}

std::string ac1() {
  Rng rng(1);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto field = reference_field(n);
    const long q = field->q().get_si();
    const auto& paper = published_matrices()[n - 1];
    const auto sym = symbolic_lambda(field);
    const auto ref = oracle_lambda(q, testing::f_low_vec(field));
    const std::string tag = "n=" + std::to_string(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto form = parse_form(paper[i][j], n);
        const std::string at = tag + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
        expect(form == ref[i][j], at + ": published form disagrees with the oracle");
        expect(form == sym[i][j], at + ": symbolic lambda disagrees");
      }
    }
    // Numeric lambda_matrix against the forms.
    for (int t = 0; t < 200; ++t) {
      const auto y = FieldElement::random(field, rng);
      const auto lambda = lambda_matrix(y);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Int v = 0;
          for (std::size_t k = 0; k < n; ++k) v += Int(ref[i][j][k]) * y[k];
          expect(lambda.at(i, j) == mod(v, field->q()), tag + ": lambda_matrix value mismatch");
        }
      }
    }
  }
  return "n=1..5 published matrices equal oracle, symbolic and numeric lambda";
}

// --- AC2 --------------------------------------------------------------------

void check_laws(const GroupParamsPtr& g, const FieldParamsPtr& f, int trials, Rng& rng) {
  for (int t = 0; t < trials; ++t) {
    auto base = FusionBase::random(g, f, rng);
    auto other = FusionBase::random(g, f, rng);
    auto x = FieldElement::random(f, rng);
    auto y = FieldElement::random(f, rng);
    const std::string at = "n=" + std::to_string(f->n()) + " q=" + to_decimal(f->q());
    expect(fusion_pow(fusion_pow(base, x), y) == fusion_pow(base, x * y), at + ": law 1");
    expect(fusion_pow(base, x + y) == fusion_pow(base, x) * fusion_pow(base, y), at + ": law 2");
    expect(fusion_pow(base * other, x) == fusion_pow(base, x) * fusion_pow(other, x),
           at + ": law 3");
  }
}

std::string ac2() {
  Rng rng(2);
  auto big = testing::big_group();
  for (std::size_t n = 1; n <= 5; ++n) {
    check_laws(testing::toy_group(), testing::field_for(11, n), 1000, rng);
    check_laws(big, testing::field_for(big->q(), n), 100, rng);
  }
  return "laws 1-3: 1000 trials/n at q=11, 100 trials/n at 64-bit q, n=1..5";
}

// --- AC3 --------------------------------------------------------------------

std::string ac3() {
  Rng rng(3);
  struct Case {
    GroupParamsPtr g;
    FieldParamsPtr f;
  };
  const std::vector<Case> cases{{testing::toy_group(), testing::toy_field()},
                                {make_group_params(7, 3, 2), testing::field_for(3, 3)}};
  for (const auto& c : cases) {
    std::set<std::vector<std::string>> seen_bases;
    while (seen_bases.size() < 5) {
      auto base = testing::random_nonidentity(c.g, c.f, rng);
      std::vector<std::string> key;
      for (const auto& e : base.components()) key.push_back(to_decimal(e.residue()));
      if (!seen_bases.insert(key).second) continue;

      std::set<std::vector<std::string>> images;
      const long size = c.f->order().get_si();
      for (long i = 0; i < size; ++i) {
        auto img = fusion_pow(base, FieldElement::from_index(c.f, Int(i)));
        std::vector<std::string> ik;
        for (const auto& e : img.components()) ik.push_back(to_decimal(e.residue()));
        images.insert(ik);
      }
      expect(static_cast<long>(images.size()) == size,
             "collision for q=" + to_decimal(c.f->q()) + " n=" + std::to_string(c.f->n()));
    }
  }
  return "bijective for q=11 n=2 (121) and q=3 n=3 (27), 5 bases each";
}

// --- AC4 --------------------------------------------------------------------

std::string ac4() {
  auto g = testing::toy_group();
  auto f = testing::toy_field();
  Rng rng(4);
  auto dlog = make_bruteforce_dlog_oracle();
  std::vector<FusionBase> bases{testing::fb(g, f, {2, 4})};
  for (int i = 0; i < 4; ++i) bases.push_back(testing::random_nonidentity(g, f, rng));
  for (const auto& base : bases) {
    for (long i = 0; i < 121; ++i) {
      auto x = FieldElement::from_index(f, Int(i));
      auto target = fusion_pow(base, x);
      auto solved = fdlog_solve(base, target, dlog);
      expect(solved == x, "fdlog_solve missed an exponent");
      expect(fdlog_bruteforce(base, target) == solved, "solve and bruteforce disagree");
    }
  }
  return "all 121 exponents recovered for 5 bases; solve == bruteforce";
}

// --- AC5 --------------------------------------------------------------------

std::string ac5() {
  auto g = testing::toy_group();
  for (std::size_t n : {2u, 3u}) {
    auto f = testing::field_for(11, n);
    const auto report = run_reduction_matrix(g, f, 100, 5);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    expect(!report.arrows.empty(), tag + "empty report");
    for (const auto& a : report.arrows) {
      expect(a.trials >= 100, tag + a.arrow + " ran too few trials");
      expect(a.success_rate() == 1.0, tag + a.arrow + " success rate below 1");
    }
    for (const char* one : {"DLP<=n-FDLP", "DHP<=n-FDHP", "DDP<=n-FDDP"}) {
      const auto* a = report.find(one);
      expect(a != nullptr, tag + "missing arrow " + one);
      expect(a->oracle_calls == a->trials, tag + one + " is not exactly 1 call per trial");
    }
    const auto* solve = report.find("n-FDLP<=DLP");
    expect(solve != nullptr, tag + "missing fdlog_solve arrow");
    expect(solve->oracle_calls == 2 * n * solve->trials, tag + "fdlog_solve is not 2n calls");
  }
  return "success 1.0 on every arrow at n=2,3; call counts 1 and 2n";
}

// --- AC6 --------------------------------------------------------------------

std::string ac6() {
  Rng rng(6);
  int instances = 0;
  for (unsigned bits = 5; bits <= 16; ++bits) {
    auto grp = gen_group_params(bits, 100 + bits);
    expect(grp->q() <= 65536, "group too large");
    Int m;
    mpz_sqrt(m.get_mpz_t(), grp->q().get_mpz_t());
    if (m * m < grp->q()) ++m;
    const Int bound = 2 * m + 4;
    for (int t = 0; t < 45; ++t, ++instances) {
      auto g = g_pow(GroupElement::generator(grp), 1 + rng.below(grp->q() - 1));
      auto y = g_pow(g, rng.below(grp->q()));
      OpCounter ops;
      const Int a = dlog_bruteforce(g, y);
      const Int b = dlog_bsgs(g, y, &ops);
      const Int c = dlog_pollard_rho(g, y, rng.next_u64());
      expect(a == b && b == c, "solvers disagree at q=" + to_decimal(grp->q()));
      expect(Int(static_cast<unsigned long>(ops.mul)) <= bound,
             "BSGS used " + std::to_string(ops.mul) + " multiplications at q=" +
                 to_decimal(grp->q()));
    }
  }
  return std::to_string(instances) + " instances agree; BSGS within 2*ceil(sqrt q)+4";
}

// --- AC7 --------------------------------------------------------------------

std::string ac7() {
  Rng rng(7);
  auto dlog = make_bruteforce_dlog_oracle();
  for (auto grp : {testing::toy_group(), gen_group_params(12, 7)}) {
    auto f1 = make_field_params(grp->q(), 1, {0});
    const Int& P = grp->modulus();
    for (int t = 0; t < 1000; ++t) {
      auto g = g_pow(GroupElement::generator(grp), 1 + rng.below(grp->q() - 1));
      Int x = rng.below(grp->q());
      auto base = FusionBase(grp, f1, {g});
      auto fx = FieldElement(f1, {x});

      auto y = fusion_pow(base, fx);
      expect(y[0] == g_pow(g, x), "fusion_pow differs from g_pow");
      Int direct;
      mpz_powm(direct.get_mpz_t(), g.residue().get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
      expect(y[0].residue() == direct, "fusion_pow differs from modular power");

      const Int scalar_log = dlog_bruteforce(g, y[0]);
      expect(fdlog_solve(base, y, dlog) == FieldElement(f1, {scalar_log}), "fdlog_solve");
      expect(fdlog_bruteforce(base, y) == FieldElement(f1, {scalar_log}), "fdlog_bruteforce");

      // ElGamal with secret x' and nonce k, against the scalar formulas.
      Int sk = 1 + rng.below(grp->q() - 1), k = 1 + rng.below(grp->q() - 1);
      auto msg = g_pow(g, rng.below(grp->q()));
      auto pk = fusion_pow(base, FieldElement(f1, {sk}));
      auto ct = felgamal_encrypt_with_nonce(base, pk, FusionBase(grp, f1, {msg}),
                                            FieldElement(f1, {k}));
      Int c1, s;
      mpz_powm(c1.get_mpz_t(), g.residue().get_mpz_t(), k.get_mpz_t(), P.get_mpz_t());
      Int e = mod(sk * k, grp->q());
      mpz_powm(s.get_mpz_t(), g.residue().get_mpz_t(), e.get_mpz_t(), P.get_mpz_t());
      expect(ct.c1[0].residue() == c1, "ElGamal c1");
      expect(ct.c2[0].residue() == mod(msg.residue() * s, P), "ElGamal c2");
      expect(felgamal_decrypt(FieldElement(f1, {sk}), ct)[0] == msg, "ElGamal decrypt");
    }
  }
  return "n=1 fusion_pow, fdlog, ElGamal match scalar versions, 2x1000 trials";
}

// --- AC8 --------------------------------------------------------------------

std::string ac8() {
  Rng rng(8);
  auto g = testing::toy_group();
  auto f = testing::toy_field();
  auto base = unit_embed(GroupElement(g, Int(2)), f);

  for (int t = 0; t < 1000; ++t) {
    auto a = fdh_keygen(base, rng);
    auto b = fdh_keygen(base, rng);
    expect(fdh_shared(a, b.public_key) == fdh_shared(b, a.public_key), "DH disagreement");
    auto msg = FusionBase::random(g, f, rng);
    expect(felgamal_decrypt(a.secret, felgamal_encrypt(base, a.public_key, msg, rng)) == msg,
           "ElGamal roundtrip");
  }

  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t t = 1; t <= m; ++t) {
      auto secret = t == 2 && m == 3 ? testing::fe(f, {7, 1}) : FieldElement::random(f, rng);
      auto d = vss_deal(secret, t, m, base, rng);
      for (std::size_t j = 1; j <= m; ++j) expect(vss_verify(d, j), "honest share rejected");
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<VssShare> s;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1) s.push_back(d.shares[i]);
        }
        if (s.size() >= t) expect(vss_reconstruct(s) == secret, "reconstruction failed");
      }
      for (std::size_t bad = 1; bad <= m; ++bad) {
        auto corrupt = d;
        corrupt.shares[bad - 1].value = corrupt.shares[bad - 1].value + testing::fe(f, {1, 0});
        for (std::size_t j = 1; j <= m; ++j) {
          expect(vss_verify(corrupt, j) == (j != bad), "corruption misattributed");
        }
      }
    }
  }
  return "DH and ElGamal x1000; VSS all subsets and corruptions for m<=5";
}

// --- AC9 --------------------------------------------------------------------

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + FUSIONEXP_BIN + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  expect(pipe != nullptr, "cannot start CLI");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  out += "\nexit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
  return out;
}

std::string ac9() {
  const std::vector<std::string> commands{
      "params --q-bits 4 --n 2 --seed 7",
      "params --q-bits 64 --n 3 --seed 1",
      "params --q-bits 3 --n 2",
      "vectors",
      "vectors --n 4",
      R"(eval --base '["2","4"]' --exp '["3","5"]')",
      R"(fdlog --base '["2","4"]' --target '["16","1"]' --solver bruteforce)",
      R"(fdlog --base '["2","4"]' --target '["16","1"]' --solver bsgs)",
      R"(fdlog --base '["2","4"]' --target '["16","1"]' --solver rho --seed 3)",
      R"(fdlog --base '["2","4"]' --target '["16","1"]' --solver exhaustive)",
      "demo dh --seed 1",
      "demo elgamal --seed 1",
      "demo vss --seed 1",
      "demo reductions --seed 1",
  };
  for (const auto& c : commands) {
    const auto first = run_cli(c);
    expect(first == run_cli(c), "output differs between runs: " + c);
  }
  return std::to_string(commands.size()) + " commands byte-identical across two runs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    std::string verdict, detail;
    try {
      detail = fn();
      verdict = "PASS";
    } catch (const Failed& f) {
      verdict = "FAIL";
      detail = f.why;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (verdict == "FAIL") ++failures;
    std::cout << name << " " << verdict << "  " << detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
