#include "tlrq/harness/export.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace tlrq::harness {

namespace {

constexpr std::string_view kHeader = "algorithm,seed,task,iteration,return";

template <class T>
void append_number(std::string& out, T value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.append(buf.data(), res.ptr);
}

template <class T>
T parse_number(std::string_view field, std::size_t line) {
    T value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw std::invalid_argument("csv line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
    }
    return value;
}

double parse_real(std::string_view field, std::size_t line) {
    // from_chars does not accept these spellings, which to_chars emits.
    if (field == "inf") return HUGE_VAL;
    if (field == "-inf") return -HUGE_VAL;
    if (field == "nan" || field == "-nan") return std::nan("");
    return parse_number<double>(field, line);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) return fields;
        start = comma + 1;
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string escape_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    std::string out;
    append_number(out, x);
    return out;
}

std::string to_csv(std::span<const Record> records) {
    std::vector<const Record*> sorted;
    sorted.reserve(records.size());
    for (const Record& r : records) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Record* a, const Record* b) {
        return std::tie(a->algorithm, a->seed, a->task, a->iteration) <
               std::tie(b->algorithm, b->seed, b->task, b->iteration);
    });

    std::string out(kHeader);
    out += '\n';
    for (const Record* r : sorted) {
        out += r->algorithm;
        out += ',';
        append_number(out, r->seed);
        out += ',';
        append_number(out, r->task);
        out += ',';
        append_number(out, r->iteration);
        out += ',';
        append_number(out, r->value);
        out += '\n';
    }
    return out;
}

std::vector<Record> parse_csv(std::string_view text) {
    std::vector<Record> records;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!seen_header) {
            if (line != kHeader) throw std::invalid_argument("csv line 1: expected header '" + std::string(kHeader) + "'");
            seen_header = true;
            continue;
        }
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 5) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 5 fields");
        records.push_back({std::string(f[0]), parse_number<std::uint64_t>(f[1], line_no),
                           parse_number<std::size_t>(f[2], line_no), parse_number<std::uint64_t>(f[3], line_no),
                           parse_real(f[4], line_no)});
    }
    if (!seen_header) throw std::invalid_argument("csv is empty");
    return records;
}

std::string summary_to_csv(std::span<const SummaryRow> rows) {
    std::string out = "algorithm,task,iteration,count,mean,stddev,lower,upper\n";
    for (const SummaryRow& r : rows) {
        out += r.algorithm;
        for (const double v : {static_cast<double>(r.task), static_cast<double>(r.iteration)}) {
            out += ',';
            append_number(out, static_cast<std::uint64_t>(v));
        }
        out += ',';
        append_number(out, r.count);
        for (const double v : {r.mean, r.stddev, r.lower, r.upper}) {
            out += ',';
            append_number(out, v);
        }
        out += '\n';
    }
    return out;
}

void write_csv(std::span<const Record> records, const std::filesystem::path& path) {
    write_file(path, to_csv(records));
}

std::vector<Record> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_csv(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void write_summary_csv(std::span<const SummaryRow> rows, const std::filesystem::path& path) {
    write_file(path, summary_to_csv(rows));
}

std::string task_plot_svg(std::span<const SummaryRow> rows, std::size_t task) {
    std::map<std::string, std::vector<const SummaryRow*>> series;
    for (const SummaryRow& r : rows) {
        if (r.task == task) series[r.algorithm].push_back(&r);
    }
    if (series.empty()) throw std::invalid_argument("no rows for task " + std::to_string(task));

    double x_max = 1.0;
    double y_lo = HUGE_VAL;
    double y_hi = -HUGE_VAL;
    for (auto& [name, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](auto* a, auto* b) { return a->iteration < b->iteration; });
        for (const SummaryRow* p : pts) {
            x_max = std::max(x_max, static_cast<double>(p->iteration));
            y_lo = std::min(y_lo, p->lower);
            y_hi = std::max(y_hi, p->upper);
        }
    }
    if (!(y_hi > y_lo)) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }

    constexpr double W = 640, H = 400, L = 70, R = 150, T = 30, B = 50;
    auto sx = [&](double x) { return L + (W - L - R) * x / x_max; };
    auto sy = [&](double y) { return T + (H - T - B) * (y_hi - y) / (y_hi - y_lo); };
    auto num = [](double v) {
        std::array<char, 32> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 1);
        return std::string(buf.data(), res.ptr);
    };
    static constexpr std::array<std::string_view, 6> colors{"#1f77b4", "#d62728", "#2ca02c",
                                                            "#9467bd", "#ff7f0e", "#8c564b"};

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" font-family=\"sans-serif\" "
                      "font-size=\"12\">\n<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(W / 2) + "\" y=\"18\" text-anchor=\"middle\">task " + std::to_string(task) + "</text>\n";
    svg += "<line x1=\"" + num(L) + "\" y1=\"" + num(H - B) + "\" x2=\"" + num(W - R) + "\" y2=\"" + num(H - B) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(L) + "\" y1=\"" + num(T) + "\" x2=\"" + num(L) + "\" y2=\"" + num(H - B) +
           "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_max * i / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
        svg += "<text x=\"" + num(sx(xv)) + "\" y=\"" + num(H - B + 16) + "\" text-anchor=\"middle\">" +
               format_double(std::round(xv)) + "</text>\n";
        svg += "<text x=\"" + num(L - 6) + "\" y=\"" + num(sy(yv) + 4) + "\" text-anchor=\"end\">" +
               num(yv) + "</text>\n";
    }
    svg += "<text x=\"" + num((L + W - R) / 2) + "\" y=\"" + num(H - 10) +
           "\" text-anchor=\"middle\">iteration</text>\n";

    std::size_t idx = 0;
    for (const auto& [name, pts] : series) {
        const std::string color(colors[idx % colors.size()]);
        std::string band, line;
        for (const SummaryRow* p : pts) band += num(sx(p->iteration)) + "," + num(sy(p->upper)) + " ";
        for (auto it = pts.rbegin(); it != pts.rend(); ++it)
            band += num(sx((*it)->iteration)) + "," + num(sy((*it)->lower)) + " ";
        for (const SummaryRow* p : pts) line += num(sx(p->iteration)) + "," + num(sy(p->mean)) + " ";
        svg += "<polygon points=\"" + band + "\" fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
        svg += "<polyline points=\"" + line + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        const double ly = T + 20.0 * static_cast<double>(idx);
        svg += "<line x1=\"" + num(W - R + 15) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(W - R + 35) + "\" y2=\"" +
               num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(W - R + 40) + "\" y=\"" + num(ly + 4) + "\">" + escape_xml(name) + "</text>\n";
        ++idx;
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::filesystem::path> write_plots(std::span<const SummaryRow> rows, const std::filesystem::path& dir) {
    std::set<std::size_t> tasks;
    for (const SummaryRow& r : rows) tasks.insert(r.task);
    std::vector<std::filesystem::path> paths;
    for (std::size_t m : tasks) {
        paths.push_back(dir / ("task" + std::to_string(m) + ".svg"));
        write_file(paths.back(), task_plot_svg(rows, m));
    }
    return paths;
}

}  // namespace tlrq::harness
