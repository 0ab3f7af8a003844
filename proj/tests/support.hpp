#pragma once

// Helpers shared by the CLI tests and the acceptance suite: run the built
// binary, read golden files, split rendered tables back into cells.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace support {

struct CliResult {
    int exit_code;
    std::string output;
};

inline CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(MERSENNE_CLI_PATH) + " " + args;
    if (merge_stderr)
        cmd += " 2>&1";
    else
        cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    std::string output;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

inline std::string trim(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    const size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::vector<std::string>> parse_csv_cells(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : split_lines(text)) {
        std::vector<std::string> row;
        std::string cell;
        std::istringstream in(line);
        while (std::getline(in, cell, ','))
            row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<std::vector<std::string>> parse_markdown_cells(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : split_lines(text)) {
        if (line.empty() || line[0] != '|')
            continue;
        std::vector<std::string> row;
        std::string cell;
        std::istringstream in(line.substr(1));
        while (std::getline(in, cell, '|'))
            row.push_back(trim(cell));
        if (!row.empty() && row.back().empty())
            row.pop_back();
        bool separator = true;
        for (const std::string& c : row)
            separator = separator && c.find_first_not_of('-') == std::string::npos;
        if (!separator)
            rows.push_back(row);
    }
    return rows;
}

} // namespace support
