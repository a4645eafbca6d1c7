#ifndef Z2EMBED_CLI_HPP
#define Z2EMBED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace z2embed {

namespace exit_code {
inline constexpr int success = 0;   // affirmative answer or completed action
inline constexpr int negative = 1;  // incompatible, not embeddable, not an embedding
inline constexpr int unknown = 2;   // search budget exhausted
inline constexpr int input_error = 3;
}  // namespace exit_code

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2embed

#endif
