#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace penta2p {

/// Entry point of the penta2p command line. `args` excludes the program
/// name. Exit status: 0 success or true verdict, 1 false or negative
/// verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace penta2p
