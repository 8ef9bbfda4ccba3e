// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gramholes/verify.hpp"

using namespace gramholes;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds, 0 for none
  std::function<std::vector<VerificationReport>()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::stoi(argv[1]) : 1;
  Workbench wb(jobs);
  const std::vector<Criterion> all = {
      {1, "counting", 1.0, [] { return std::vector{count_check()}; }},
      {2, "G_1 and det G_1", 1.0, [&] { return std::vector{g1_check(wb)}; }},
      {3, "det G_2", 0, [&] { return std::vector{det_g2_check(wb)}; }},
      {4, "diagonal exponents", 120.0, [] { return std::vector{delta_check(4, 8)}; }},
      {5, "highest terms of det G_2", 0, [&] { return std::vector{highest_terms_check(2, wb)}; }},
      {6, "highest terms of det G_3", 0, [&] { return std::vector{highest_terms_check(3, wb)}; }},
      {7, "divisibility", 0, [&] { return std::vector{divisibility_check(wb)}; }},
      {8, "reduction", 0, [&] { return std::vector{reduction_check(wb)}; }},
      {9, "involutions", 0, [&] { return std::vector{involution_suite(1, wb), involution_suite(2, wb)}; }},
      {10, "type B", 0, [&] { return std::vector{type_b_check(1, jobs), type_b_check(2, jobs), type_b_check(3, jobs)}; }},
      {11, "specializations", 0, [&] { return std::vector{specialized_g3_check(jobs), three_holes_check()}; }},
      {12, "property suites", 0,
       [&] {
         return std::vector{transpose_law(3),           degree_criterion(3),        embedding_laws(1),
                            embedding_laws(2),          engine_agreement(1, wb),    engine_agreement(2, wb),
                            engine_agreement(3, wb),    diagonal_purity(5)};
       }},
  };

  bool all_ok = true;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    const bool in_time = c.limit == 0 || secs < c.limit;
    const bool pass = ok && in_time;
    all_ok = all_ok && pass;
    char line[160];
    std::snprintf(line, sizeof line, "%s %2d %-26s %9.2fs", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs);
    std::cout << line;
    if (!in_time) std::cout << "  over the " << c.limit << "s limit";
    std::cout << std::endl;
    if (!ok)
      for (const auto& r : reports)
        if (!r.passed()) std::cout << "     " << r.claim << ": " << r.witness.dump() << std::endl;
  }
  return all_ok ? 0 : 1;
}
