#include "qtl/runio.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qtl::runio {

namespace fs = std::filesystem;

std::string write_manifest(const RunManifest& m) {
    fs::create_directories(m.output_dir);
    nlohmann::json j;
    j["command"] = m.command;
    j["config_path"] = m.config_path;
    j["output_dir"] = m.output_dir;
    j["emitted_files"] = m.emitted_files;
    j["failures"] = m.failures;
    j["exit_code"] = m.exit_code;
    const fs::path path = fs::path(m.output_dir) / "manifest.json";
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << j.dump(2) << '\n';
    return path.string();
}

std::string emit_plot_script(const std::vector<meansquare::MeanSquareRow>& rows,
                             const std::string& output_dir) {
    if (rows.empty()) throw std::invalid_argument("emit_plot_script: no rows");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (!(rows[i].X > rows[i - 1].X))
            throw std::invalid_argument("emit_plot_script: rows must be in ascending X order");

    fs::create_directories(output_dir);
    const std::string csv_name = "meansquare.csv";
    const fs::path csv_path = fs::path(output_dir) / csv_name;
    {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
        meansquare::write_csv_header(csv);
        for (const auto& r : rows) meansquare::write_csv_row(csv, r);
    }

    const fs::path script_path = fs::path(output_dir) / "plot_ratio.gp";
    std::ofstream gp(script_path);
    if (!gp) throw std::runtime_error("cannot write " + script_path.string());
    gp << "# ratio of empirical to predicted mean square against log10(X)\n"
          "set datafile separator ','\n"
          "set xlabel 'log10(X)'\n"
          "set ylabel 's_empirical / s_predicted'\n"
          "set key left bottom\n"
          "plot '"
       << csv_name
       << "' every ::1 using (log10($1)):5 with linespoints pt 7 title 'ratio', \\\n"
          "     1.0 with lines dashtype 2 lc rgb 'gray40' title 'main term'\n";
    return script_path.string();
}

}  // namespace qtl::runio
