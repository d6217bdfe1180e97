#include "abspec/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace abspec::io {

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

std::string sectors_field(const std::vector<int>& sectors) {
    std::string s;
    for (size_t i = 0; i < sectors.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(sectors[i]);
    }
    return s;
}

std::string record_json(const EigenvalueRecord& r) {
    std::string s = "{\"lambda\":" + fmt15(r.lambda);
    s += ",\"z\":";
    s += r.z ? fmt15(*r.z) : "null";
    s += ",\"source\":\"" + std::string(to_string(r.source)) + "\"";
    s += ",\"sectors\":[";
    for (size_t i = 0; i < r.sectors.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(r.sectors[i]);
    }
    s += "],\"multiplicity\":" + std::to_string(r.multiplicity);
    s += ",\"multiplicity_truncated\":";
    s += r.multiplicity_truncated ? "true" : "false";
    s += "}";
    return s;
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const std::vector<EigenvalueRecord>& recs) {
    os << "lambda,z,source,sectors,multiplicity\n";
    for (const auto& r : recs) {
        os << fmt15(r.lambda) << ',';
        if (r.z) os << fmt15(*r.z);
        os << ',' << to_string(r.source) << ',' << sectors_field(r.sectors) << ','
           << r.multiplicity << '\n';
    }
}

void write_spectrum_json(std::ostream& os, const std::vector<EigenvalueRecord>& recs,
                         const std::string& config_json,
                         const std::vector<std::string>& diagnostics) {
    os << "{\"config\":" << config_json << ",\"records\":[";
    for (size_t i = 0; i < recs.size(); ++i) {
        if (i) os << ',';
        os << record_json(recs[i]);
    }
    os << "],\"diagnostics\":[";
    for (size_t i = 0; i < diagnostics.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(diagnostics[i]) << '"';
    }
    os << "]}\n";
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    os << "t,branch_id,lambda\n";
    for (const auto& br : table.branches)
        for (size_t i = 0; i < table.t_values.size(); ++i)
            if (!std::isnan(br.lambda[i]))
                os << fmt15(table.t_values[i]) << ',' << br.id << ','
                   << fmt15(br.lambda[i]) << '\n';
}

void write_sweep_json(std::ostream& os, const SweepTable& table,
                      const std::string& config_json) {
    os << "{\"config\":" << config_json << ",\"t\":[";
    for (size_t i = 0; i < table.t_values.size(); ++i) {
        if (i) os << ',';
        os << fmt15(table.t_values[i]);
    }
    os << "],\"branches\":[";
    for (size_t b = 0; b < table.branches.size(); ++b) {
        const auto& br = table.branches[b];
        if (b) os << ',';
        os << "{\"id\":" << br.id << ",\"sector\":";
        if (br.sector == 99)
            os << "null";
        else
            os << br.sector;
        os << ",\"lambda\":[";
        for (size_t i = 0; i < br.lambda.size(); ++i) {
            if (i) os << ',';
            if (std::isnan(br.lambda[i]))
                os << "null";
            else
                os << fmt15(br.lambda[i]);
        }
        os << "]}";
    }
    os << "],\"stable_levels\":[";
    for (size_t i = 0; i < table.stable_levels.size(); ++i) {
        if (i) os << ',';
        os << fmt15(table.stable_levels[i]);
    }
    os << "],\"diagnostics\":[";
    for (size_t i = 0; i < table.diagnostics.size(); ++i) {
        if (i) os << ',';
        os << '"' << json_escape(table.diagnostics[i]) << '"';
    }
    os << "]}\n";
}

namespace {

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= mult * mag) return mult * mag;
    }
    return 10.0 * mag;
}

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

void write_sweep_svg(std::ostream& os, const SweepTable& table,
                     const std::string& title, double lambda_lo, double lambda_hi) {
    const double W = 960, H = 640, L = 70, R = 25, T = 40, Bm = 55;
    const double t_lo = table.t_values.front(), t_hi = table.t_values.back();
    auto xmap = [&](double t) {
        return L + (t - t_lo) / (t_hi - t_lo) * (W - L - R);
    };
    auto ymap = [&](double lam) {
        return H - Bm - (lam - lambda_lo) / (lambda_hi - lambda_lo) * (H - T - Bm);
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
       << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"15\">"
       << title << "</text>\n";
    // axes
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\""
       << H - Bm << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - Bm << "\" x2=\"" << W - R
       << "\" y2=\"" << H - Bm << "\" stroke=\"black\"/>\n";
    const double xs = nice_step(t_hi - t_lo, 10);
    for (double t = std::ceil(t_lo / xs) * xs; t <= t_hi + 1e-12; t += xs) {
        os << "<line x1=\"" << xmap(t) << "\" y1=\"" << H - Bm << "\" x2=\""
           << xmap(t) << "\" y2=\"" << H - Bm + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << xmap(t) << "\" y=\"" << H - Bm + 20
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
              "font-size=\"12\">"
           << fmt15(std::round(t * 1e6) / 1e6) << "</text>\n";
    }
    const double ys = nice_step(lambda_hi - lambda_lo, 10);
    for (double lam = std::ceil(lambda_lo / ys) * ys; lam <= lambda_hi + 1e-12;
         lam += ys) {
        os << "<line x1=\"" << L - 5 << "\" y1=\"" << ymap(lam) << "\" x2=\"" << L
           << "\" y2=\"" << ymap(lam) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << L - 9 << "\" y=\"" << ymap(lam) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
           << fmt15(std::round(lam * 1e6) / 1e6) << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 14
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"13\">t</text>\n";
    os << "<text x=\"18\" y=\"" << (T + H - Bm) / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "transform=\"rotate(-90 18 "
       << (T + H - Bm) / 2 << ")\">lambda</text>\n";
    // stable levels as dashed reference lines
    for (double lam : table.stable_levels) {
        if (lam < lambda_lo || lam > lambda_hi) continue;
        os << "<line x1=\"" << L << "\" y1=\"" << ymap(lam) << "\" x2=\"" << W - R
           << "\" y2=\"" << ymap(lam)
           << "\" stroke=\"#999999\" stroke-dasharray=\"6,5\" "
              "stroke-width=\"1\"/>\n";
    }
    // branches
    for (const auto& br : table.branches) {
        const char* color = kPalette[br.id % 8];
        std::string pts;
        auto flush = [&]() {
            if (!pts.empty()) {
                os << "<polyline fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"1.6\" points=\"" << pts << "\"/>\n";
                pts.clear();
            }
        };
        for (size_t i = 0; i < table.t_values.size(); ++i) {
            if (std::isnan(br.lambda[i]) || br.lambda[i] < lambda_lo ||
                br.lambda[i] > lambda_hi) {
                flush();
                continue;
            }
            pts += fmt15(xmap(table.t_values[i])) + "," +
                   fmt15(ymap(br.lambda[i])) + " ";
        }
        flush();
    }
    os << "</svg>\n";
}

void write_checks_text(std::ostream& os, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
           << "  measured=" << fmt15(r.measured) << " tol=" << fmt15(r.threshold);
        if (!r.detail.empty()) os << "  (" << r.detail << ")";
        os << '\n';
    }
}

void write_checks_json(std::ostream& os, const std::vector<CheckResult>& results,
                       const std::string& config_json) {
    os << "{\"config\":" << config_json << ",\"checks\":[";
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (i) os << ',';
        os << "{\"name\":\"" << json_escape(r.name) << "\",\"pass\":"
           << (r.pass ? "true" : "false") << ",\"measured\":" << fmt15(r.measured)
           << ",\"threshold\":" << fmt15(r.threshold) << ",\"detail\":\""
           << json_escape(r.detail) << "\"}";
    }
    os << "]}\n";
}

}  // namespace abspec::io
