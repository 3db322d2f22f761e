#include "varshape/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace varshape {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

Contour load_contour_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::vector<Vec2> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (lineno == 1 && (t == "x,y" || t == "x, y")) continue;
        const std::size_t comma = t.find(',');
        if (comma == std::string::npos) parse_fail(path, lineno, "expected 'x,y'");
        const std::string xs = trim(t.substr(0, comma));
        const std::string ys = trim(t.substr(comma + 1));
        double x, y;
        auto rx = std::from_chars(xs.data(), xs.data() + xs.size(), x);
        auto ry = std::from_chars(ys.data(), ys.data() + ys.size(), y);
        if (rx.ec != std::errc{} || rx.ptr != xs.data() + xs.size())
            parse_fail(path, lineno, "non-numeric x field '" + xs + "'");
        if (ry.ec != std::errc{} || ry.ptr != ys.data() + ys.size())
            parse_fail(path, lineno, "non-numeric y field '" + ys + "'");
        if (!pts.empty() && pts.back() == Vec2{x, y})
            parse_fail(path, lineno, "duplicate consecutive point");
        pts.push_back({x, y});
    }
    if (pts.size() >= 2 && pts.front() == pts.back())
        parse_fail(path, lineno, "duplicate consecutive point (closing edge)");
    if (pts.size() < 3) parse_fail(path, lineno, "contour needs at least 3 points");
    return Contour::ccw(std::move(pts));
}

void save_contour_csv(const std::filesystem::path& path, const Contour& c) {
    std::string out = "x,y\n";
    for (const Vec2& p : c.points()) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    write_file_atomic(path, out);
}

namespace {

struct Raster {
    std::size_t width = 0, height = 0;
    std::vector<bool> fg;

    bool at(long long x, long long y) const {
        if (x < 0 || y < 0 || x >= static_cast<long long>(width) || y >= static_cast<long long>(height))
            return false;
        return fg[static_cast<std::size_t>(y) * width + static_cast<std::size_t>(x)];
    }
};

Raster read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    auto next_token = [&]() -> std::string {
        std::string tok;
        int ch;
        while ((ch = in.get()) != EOF) {
            if (ch == '#') {  // comment to end of line
                while ((ch = in.get()) != EOF && ch != '\n') {}
                continue;
            }
            if (std::isspace(ch)) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(static_cast<char>(ch));
        }
        return tok;
    };

    if (next_token() != "P5") throw std::runtime_error(path.string() + ": not a binary PGM (P5)");
    const std::string ws = next_token(), hs = next_token(), ms = next_token();
    std::size_t w = 0, h = 0;
    int maxval = 0;
    try {
        w = std::stoul(ws);
        h = std::stoul(hs);
        maxval = std::stoi(ms);
    } catch (...) {
        throw std::runtime_error(path.string() + ": malformed PGM header");
    }
    if (w == 0 || h == 0 || maxval <= 0 || maxval > 255)
        throw std::runtime_error(path.string() + ": unsupported PGM geometry or depth");

    std::vector<char> raw(w * h);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw std::runtime_error(path.string() + ": truncated PGM raster");

    Raster r;
    r.width = w;
    r.height = h;
    r.fg.resize(w * h);
    for (std::size_t i = 0; i < raw.size(); ++i)
        r.fg[i] = 2 * static_cast<unsigned char>(raw[i]) > maxval;  // 50% gray threshold
    return r;
}

std::size_t count_components8(const Raster& r) {
    std::vector<char> seen(r.width * r.height, 0);
    std::size_t comps = 0;
    for (std::size_t y = 0; y < r.height; ++y)
        for (std::size_t x = 0; x < r.width; ++x) {
            const std::size_t id = y * r.width + x;
            if (!r.fg[id] || seen[id]) continue;
            ++comps;
            std::queue<std::pair<long long, long long>> q;
            q.push({static_cast<long long>(x), static_cast<long long>(y)});
            seen[id] = 1;
            while (!q.empty()) {
                auto [cx, cy] = q.front();
                q.pop();
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const long long nx = cx + dx, ny = cy + dy;
                        if (!r.at(nx, ny)) continue;
                        const std::size_t nid = static_cast<std::size_t>(ny) * r.width +
                                                static_cast<std::size_t>(nx);
                        if (!seen[nid]) {
                            seen[nid] = 1;
                            q.push({nx, ny});
                        }
                    }
            }
        }
    return comps;
}

// clockwise Moore neighborhood in image coordinates (y down), from west
constexpr int kMooreDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kMooreDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

std::vector<Vec2> moore_trace(const Raster& r) {
    long long sx = -1, sy = -1;
    for (std::size_t y = 0; y < r.height && sx < 0; ++y)
        for (std::size_t x = 0; x < r.width; ++x)
            if (r.fg[y * r.width + x]) {
                sx = static_cast<long long>(x);
                sy = static_cast<long long>(y);
                break;
            }
    if (sx < 0) throw std::runtime_error("trace: no foreground component");

    std::vector<Vec2> boundary;
    long long cx = sx, cy = sy;
    int enter = 0;  // neighbor index pointing back where we came from (west at start)
    const int start_enter = enter;
    boundary.push_back({static_cast<double>(cx), static_cast<double>(cy)});

    const std::size_t walk_limit = 4 * r.width * r.height + 8;
    for (std::size_t iter = 0; iter < walk_limit; ++iter) {
        int found = -1;
        for (int step = 1; step <= 8; ++step) {
            const int dir = (enter + step) % 8;
            if (r.at(cx + kMooreDx[dir], cy + kMooreDy[dir])) {
                found = dir;
                // the neighbor scanned just before `dir` is background; the
                // next scan restarts from it
                const int prev = (enter + step - 1) % 8;
                const long long bx = cx + kMooreDx[prev], by = cy + kMooreDy[prev];
                cx += kMooreDx[dir];
                cy += kMooreDy[dir];
                enter = 0;
                for (int d = 0; d < 8; ++d)
                    if (cx + kMooreDx[d] == bx && cy + kMooreDy[d] == by) {
                        enter = d;
                        break;
                    }
                break;
            }
        }
        if (found < 0) break;  // isolated pixel
        if (cx == sx && cy == sy && enter == start_enter) return boundary;  // Jacob's criterion
        boundary.push_back({static_cast<double>(cx), static_cast<double>(cy)});
    }
    if (boundary.size() >= walk_limit) throw std::runtime_error("trace: boundary walk failed to close");
    return boundary;
}

}  // namespace

Contour trace_binary_image(const std::filesystem::path& path) {
    const Raster r = read_pgm(path);
    const std::size_t comps = count_components8(r);
    if (comps == 0) throw std::runtime_error(path.string() + ": no foreground component");
    if (comps > 1)
        throw std::runtime_error(path.string() + ": multiple foreground components (" +
                                 std::to_string(comps) + ")");
    std::vector<Vec2> boundary = moore_trace(r);
    // drop a re-appended start and any consecutive repeats from thin limbs
    std::vector<Vec2> clean;
    for (const Vec2& p : boundary)
        if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
    while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
    if (clean.size() < 3) throw std::runtime_error(path.string() + ": degenerate contour (<3 boundary points)");
    return Contour::ccw(std::move(clean));
}

std::vector<ShapeRecord> load_dataset(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(root)) throw std::runtime_error("dataset root not found: " + root.string());
    std::vector<ShapeRecord> records;
    std::vector<fs::path> class_dirs;
    for (const auto& e : fs::directory_iterator(root))
        if (e.is_directory()) class_dirs.push_back(e.path());
    std::sort(class_dirs.begin(), class_dirs.end());
    for (const fs::path& cd : class_dirs) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(cd))
            if (e.is_regular_file()) {
                const std::string ext = e.path().extension().string();
                if (ext == ".csv" || ext == ".pgm") files.push_back(e.path());
            }
        std::sort(files.begin(), files.end());
        for (const fs::path& f : files) {
            Contour c = f.extension() == ".pgm" ? trace_binary_image(f) : load_contour_csv(f);
            records.push_back({cd.filename().string(), f.stem().string(), std::move(c), f});
        }
    }
    return records;
}

// ---------------------------------------------------------------------------
// results
// ---------------------------------------------------------------------------

namespace {

std::string format_fixed(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const char* method_color(Method m) {
    switch (m) {
        case Method::Vo: return "#1f4fd8";
        case Method::V: return "#1a9e3c";
        case Method::AI: return "#d0312d";
        case Method::K: return "#18b5c8";
        case Method::SK: return "#c13fc1";
        case Method::GT: return "#000000";
    }
    return "#888888";
}

struct SvgSeries {
    std::string label;
    std::string color;
    bool dashed = false;
    std::vector<double> values;
};

std::string svg_line_plot(const std::string& title, const std::vector<SvgSeries>& series) {
    const double W = 640, H = 420, ml = 50, mr = 16, mt = 30, mb = 36;
    double lo = 0.0, hi = 1.0;
    bool any = false;
    for (const auto& s : series)
        for (double v : s.values) {
            if (!any) {
                lo = hi = v;
                any = true;
            }
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!any || hi == lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    std::size_t maxn = 1;
    for (const auto& s : series) maxn = std::max(maxn, s.values.size());

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    svg << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">" << title << "</text>\n";
    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", hi);
    svg << "<text x=\"" << ml - 4 << "\" y=\"" << mt + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof(buf), "%.3g", lo);
    svg << "<text x=\"" << ml - 4 << "\" y=\"" << H - mb
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << buf << "</text>\n";

    auto sx = [&](std::size_t i, std::size_t n) {
        return ml + (W - ml - mr) * (n <= 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1));
    };
    auto sy = [&](double v) { return H - mb - (H - mt - mb) * (v - lo) / (hi - lo); };

    double ly = mt + 6;
    for (const auto& s : series) {
        if (s.values.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
        if (s.dashed) svg << " stroke-dasharray=\"5,3\"";
        svg << " points=\"";
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(i, s.values.size()), sy(s.values[i]));
            svg << buf;
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << W - mr - 4 << "\" y=\"" << ly
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\" fill=\"" << s.color
            << "\">" << s.label << (s.dashed ? " (low)" : "") << "</text>\n";
        ly += 12;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string pr_csv(const std::string& shape, const std::string& method, std::size_t points,
                   const PRCurve& pr) {
    std::string out = "shape,method,points,recall_pos,precision\n";
    for (std::size_t m = 0; m < pr.values.size(); ++m) {
        out += shape;
        out += ',';
        out += method;
        out += ',';
        out += std::to_string(points);
        out += ',';
        out += std::to_string(m + 1);
        out += ',';
        out += format_fixed(pr.values[m]);
        out += '\n';
    }
    return out;
}

}  // namespace

std::vector<std::filesystem::path> write_results(const std::vector<ShapeResult>& records,
                                                 const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> manifest;
    if (records.empty()) return manifest;
    fs::create_directories(out_dir);

    for (const ShapeResult& r : records) {
        const fs::path shape_dir = out_dir / r.class_name / r.shape_name;
        for (const auto& e : r.entries) {
            const fs::path p = shape_dir / (method_name(e.method) + "_" + std::to_string(e.points) + ".csv");
            write_file_atomic(p, pr_csv(r.shape_name, method_name(e.method), e.points, e.pr));
            manifest.push_back(p);
        }
        if (r.series_points > 0) {
            auto normalize = [](const ScalarSeries& s) {
                double lo = s.empty() ? 0.0 : s[0], hi = lo;
                for (double v : s) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                std::vector<double> out(s.size());
                for (std::size_t i = 0; i < s.size(); ++i)
                    out[i] = hi > lo ? (s[i] - lo) / (hi - lo) : 0.5;
                return out;
            };
            std::vector<SvgSeries> series;
            series.push_back({"phi", method_color(Method::Vo), false, normalize(r.phi_series)});
            series.push_back({"AI", method_color(Method::AI), false, normalize(r.ai_series)});
            const fs::path p = shape_dir / "descriptors.svg";
            write_file_atomic(p, svg_line_plot(r.shape_name + " descriptors (" +
                                                   std::to_string(r.series_points) + " points)",
                                               series));
            manifest.push_back(p);
        }
    }

    // class averages: (class, method, points) -> curves
    std::map<std::string, std::map<std::pair<std::string, std::size_t>, std::vector<PRCurve>>> classes;
    for (const ShapeResult& r : records)
        for (const auto& e : r.entries)
            classes[r.class_name][{method_name(e.method), e.points}].push_back(e.pr);

    for (const auto& [cls, table] : classes) {
        std::string csv = "shape,method,points,recall_pos,precision\n";
        std::size_t min_pts = SIZE_MAX, max_pts = 0;
        for (const auto& [key, _] : table) {
            min_pts = std::min(min_pts, key.second);
            max_pts = std::max(max_pts, key.second);
        }
        std::vector<SvgSeries> series;
        for (const auto& [key, curves] : table) {
            const PRCurve avg = average_pr(curves);
            for (std::size_t m = 0; m < avg.values.size(); ++m) {
                csv += cls + "," + key.first + "," + std::to_string(key.second) + "," +
                       std::to_string(m + 1) + "," + format_fixed(avg.values[m]) + "\n";
            }
            if (key.second == max_pts || key.second == min_pts) {
                std::vector<double> display = avg.values;  // clip below zero for display only
                for (double& v : display) v = std::max(v, 0.0);
                series.push_back({key.first + "@" + std::to_string(key.second),
                                  method_color(method_from_name(key.first)), key.second == min_pts,
                                  std::move(display)});
            }
        }
        const fs::path csv_path = out_dir / cls / "class_average.csv";
        write_file_atomic(csv_path, csv);
        manifest.push_back(csv_path);
        const fs::path svg_path = out_dir / cls / "pr_curves.svg";
        write_file_atomic(svg_path, svg_line_plot(cls + " class-average precision-recall", series));
        manifest.push_back(svg_path);
    }
    return manifest;
}

}  // namespace varshape
