#ifndef ROADCOLOR_TOOLS_COMMANDS_HPP
#define ROADCOLOR_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace roadcolor::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

struct ColorFlags {
    bool emit_word = false;
    bool paranoid = false;
};

// `input` holds the graph text; results go to `out`, diagnostics to `err`.
int cmd_check(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_color(const std::string& input, ColorFlags flags, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_gen(std::uint64_t n, std::uint64_t d, std::uint64_t seed, std::ostream& out,
            std::ostream& err);
int cmd_dot(const std::string& input, std::ostream& out, std::ostream& err);

/// Reads a whole file, or standard input for "-". Returns false if it cannot be opened.
bool read_input(const std::string& path, std::string& text);

}  // namespace roadcolor::cli

#endif  // ROADCOLOR_TOOLS_COMMANDS_HPP
