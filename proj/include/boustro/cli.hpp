#pragma once

// Command-line front end. run() is the whole program; the binary's main()
// forwards to it, and tests drive it directly with captured streams.
//
// Subcommands that consume a sequence read it from in (usually a pipe)
// when none of --seq, --input-file, --builtin is given.
//
// Exit status: 0 success, 1 usage error, 2 domain error. Diagnostics go to
// err as a single line.

#include <istream>
#include <ostream>

namespace boustro::cli {

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace boustro::cli
