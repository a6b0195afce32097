#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "topmono/cli.hpp"

namespace helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(TOPMONO_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Writes `content` under a stable name in the test temp directory and
// returns the path. Reused across runs; content is overwritten.
inline std::string temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "topmono_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    return path.string();
}

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = topmono::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace helpers
