#include <iostream>

#include "verify.hpp"

int main()
{
  auto results = cdecomp::tools::run_verification("all");
  std::cout << cdecomp::tools::format_results(results);
  for (auto const &r : results)
    if (!r.pass())
      return 1;
  return 0;
}
