// Regenerates data/moduli.txt: the least primitive modulus in the
// alternating-sign key order for every p^e (e >= 2) up to a size limit, and
// for small primes with e = 1.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "constamax/field.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Write the modulus table"};
  std::string out_path = "data/moduli.txt";
  uint64_t max_size = uint64_t{1} << 20;
  uint32_t max_linear = 97;
  std::string version = "1";
  app.add_option("--out", out_path, "Output file");
  app.add_option("--max-size", max_size, "Largest p^e to include");
  app.add_option("--max-linear", max_linear, "Largest prime with an e = 1 entry");
  app.add_option("--version", version, "Version tag written to the header");
  CLI11_PARSE(app, argc, argv);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << '\n';
    return 1;
  }
  out << "# version: " << version << '\n';
  out << "# p e c0 c1 ... ce  (monic, primitive, constant term first)\n";
  size_t count = 0;
  for (uint32_t p = 2; uint64_t{p} * p <= max_size || p <= max_linear; ++p) {
    if (!constamax::is_prime(p)) continue;
    uint64_t q = p;
    for (uint32_t e = 1; q <= max_size; ++e, q *= p) {
      if (e == 1 && p > max_linear) continue;
      const auto c = constamax::search_modulus(p, e);
      out << p << ' ' << e;
      for (uint32_t v : c) out << ' ' << v;
      out << '\n';
      ++count;
    }
  }
  std::cerr << "wrote " << count << " moduli to " << out_path << '\n';
  return 0;
}
