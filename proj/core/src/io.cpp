#include "commlip/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "commlip/errors.hpp"

namespace commlip {

namespace {

using nlohmann::json;

bool is_space(char ch)
{
    return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v';
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json matrix_to_json(const CMatrix& M)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back({M(i, j).real(), M(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

} // namespace

std::vector<double> parse_parameter_text(std::string_view text)
{
    std::vector<double> values;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
        while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
        if (line.empty()) continue;
        // from_chars rejects a leading '+', which some writers emit.
        if (line.front() == '+') line.remove_prefix(1);

        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size() || !std::isfinite(v)) {
            throw FormatError("line " + std::to_string(line_no) + ": not a number: '" +
                              std::string(line) + "'");
        }
        values.push_back(v);
    }
    return values;
}

std::vector<double> read_parameter_file(const std::filesystem::path& path)
{
    return parse_parameter_text(read_text(path));
}

std::vector<GaussianParams> read_parameter_table(const std::filesystem::path& a_path,
                                                 const std::filesystem::path& b_path,
                                                 std::size_t expected)
{
    const auto a = read_parameter_file(a_path);
    const auto b = read_parameter_file(b_path);
    if (a.size() != b.size() || a.size() != expected) {
        std::ostringstream msg;
        msg << "parameter tables have " << a.size() << " and " << b.size()
            << " rows but the grid has " << expected << " nodes";
        throw BadParameter(msg.str());
    }
    std::vector<GaussianParams> table;
    table.reserve(expected);
    for (std::size_t k = 0; k < expected; ++k) table.push_back({a[k], b[k]});
    return table;
}

void atomic_write(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FormatError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw FormatError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string certificate_to_json(const StitchedCertificate& cert)
{
    json j;
    j["grid"] = json::array();
    j["C_k"] = json::array();
    j["params"] = json::array();
    j["degenerate"] = json::array();
    for (const auto& p : cert.points) {
        j["grid"].push_back(p.c);
        j["C_k"].push_back(p.C_k);
        j["params"].push_back({p.params.a, p.params.b});
        j["degenerate"].push_back(p.degenerate);
    }
    j["D_k"] = cert.lifted;
    j["delta_c"] = cert.delta_c;
    j["corner_small"] = cert.corner_small;
    j["corner_large"] = cert.corner_large;
    j["global_C"] = cert.global_C;
    return j.dump(1) + "\n";
}

StitchedCertificate certificate_from_json(std::string_view text)
{
    try {
        const json j = json::parse(text);
        StitchedCertificate cert;
        const auto& grid = j.at("grid");
        const auto& ck = j.at("C_k");
        const auto& params = j.at("params");
        if (ck.size() != grid.size() || params.size() != grid.size()) {
            throw FormatError("certificate arrays differ in length");
        }
        const bool has_flags = j.contains("degenerate");
        for (std::size_t k = 0; k < grid.size(); ++k) {
            BoundPoint p;
            p.c = grid[k].get<double>();
            p.C_k = ck[k].get<double>();
            p.params = {params[k].at(0).get<double>(), params[k].at(1).get<double>()};
            p.degenerate = has_flags ? j["degenerate"][k].get<bool>() : p.C_k == kDegenerateValue;
            cert.points.push_back(p);
        }
        cert.lifted = j.at("D_k").get<std::vector<double>>();
        cert.delta_c = j.value("delta_c", 0.0);
        cert.corner_small = j.at("corner_small").get<double>();
        cert.corner_large = j.at("corner_large").get<double>();
        cert.global_C = j.at("global_C").get<double>();
        return cert;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed certificate: ") + e.what());
    }
}

StitchedCertificate read_certificate(const std::filesystem::path& path)
{
    return certificate_from_json(read_text(path));
}

std::string points_to_csv(const std::vector<BoundPoint>& points, const std::vector<double>& lifted)
{
    std::string out = "c_k,C_k,D_k,a,b,degenerate\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& p = points[k];
        const double d = k < lifted.size() ? lifted[k] : std::numeric_limits<double>::quiet_NaN();
        out += format_double(p.c) + ',' + format_double(p.C_k) + ',' + format_double(d) + ',' +
               format_double(p.params.a) + ',' + format_double(p.params.b) + ',' +
               (p.degenerate ? "1" : "0") + '\n';
    }
    return out;
}

std::string campaign_to_json(const CampaignReport& report)
{
    json j;
    j["seed"] = report.config.seed;
    j["trials"] = report.config.trials;
    j["norm"] = report.config.norm.name();
    j["f"] = report.config.f_name;
    j["n_max"] = report.config.n_max;
    j["evaluated"] = report.evaluated;
    j["skipped"] = report.skipped;
    j["max_ratio"] = report.max_ratio;
    j["argmax"] = {{"A", matrix_to_json(report.argmax.A)},
                   {"B", matrix_to_json(report.argmax.B)},
                   {"X", matrix_to_json(report.argmax.X)}};
    j["histogram"] = {{"bin_width", report.histogram_width}, {"counts", report.histogram}};
    return j.dump(1) + "\n";
}

} // namespace commlip
