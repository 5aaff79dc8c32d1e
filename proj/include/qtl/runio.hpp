#pragma once
// Run artifacts: the JSON manifest written by every CLI invocation and the
// gnuplot script emitted after a mean-square sweep.

#include <string>
#include <vector>

#include "qtl/meansquare.hpp"

namespace qtl::runio {

struct RunManifest {
    std::string command;
    std::string config_path;
    std::string output_dir;
    std::vector<std::string> emitted_files;
    std::vector<std::string> failures;  // machine-readable failure list
    int exit_code = 0;
};

// Writes <output_dir>/manifest.json (created even when the run failed).
std::string write_manifest(const RunManifest& manifest);

// Writes the row CSV plus a gnuplot script graphing ratio against log10(X)
// with a reference line at 1. Rows must be in ascending X order; the script
// refers to the CSV by relative path. Returns the script path.
std::string emit_plot_script(const std::vector<meansquare::MeanSquareRow>& rows,
                             const std::string& output_dir);

}  // namespace qtl::runio
