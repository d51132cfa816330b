// Reads a profile (default: the built-in 2k-voter family with k = 3) and
// reports what the library knows about it.

#include <fstream>
#include <iostream>

#include "eucdom/eucdom.hpp"

int main(int argc, char** argv) {
  using namespace eucdom;
  Profile p = family::gen_profile(3);
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << "\n";
      return 2;
    }
    p = parse_profile(in);
  }

  const auto axes = enumerate_axes(p);
  std::cout << "canonical single-peaked axes: " << axes.axes.size() << "\n";
  if (const auto order = find_sc_order(p)) std::cout << "single-crossing order: " << join_ids(*order, "v") << "\n";

  const auto result = recognize_euclidean(p);
  if (result.status == EuclideanStatus::Euclidean) {
    std::cout << "euclidean on axis " << join_ids(*result.axis) << "\n" << serialize_embedding(*result.embedding);
  } else {
    std::cout << "not euclidean; " << result.certificates.size() << " axis certificate(s)\n";
    for (const auto& c : result.certificates)
      std::cout << "  axis " << join_ids(c.axis) << " certificate valid: " << std::boolalpha
                << check_certificate(c.system, c.certificate) << "\n";
  }
  return 0;
}
