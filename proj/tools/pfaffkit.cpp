#include <iostream>
#include <string>
#include <vector>

#include "pfaffkit/app.hpp"

int main(int argc, char** argv) {
  bool pretty = false;
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--pretty") {
      pretty = true;
    } else {
      args.push_back(std::move(a));
    }
  }
  pfaffkit::Outcome out = pfaffkit::run_cli(args);
  std::cout << out.envelope.dump(pretty ? 2 : -1) << "\n";
  return out.exit_code;
}
