#include "paperhorn/run.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "paperhorn/band_planner.hpp"
#include "paperhorn/expression.hpp"
#include "paperhorn/report.hpp"
#include "paperhorn/svg_layout.hpp"

namespace paperhorn {

namespace {

constexpr int kValidationSamples = 1000;

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Carries the pipeline stage into the diagnostic.
class StageError : public std::runtime_error {
 public:
  StageError(std::string_view stage, const std::string& what)
      : std::runtime_error(fmt::format("{} failed: {}", stage, what)) {}
};

template <typename F>
auto stage(std::string_view name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

void check_config(const RunConfig& c) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument(fmt::format("{} must be a positive number", name));
  };
  if (!std::isfinite(c.start_x)) throw std::invalid_argument("start must be finite");
  positive(c.band_spacing, "spacing");
  positive(c.scale_mm_per_unit, "scale");
  positive(c.overhang, "overhang");
  if (c.count < 1) throw std::invalid_argument("count must be >= 1");
}

}  // namespace

CurveChoice make_curve(const std::string& spec, double start_x) {
  std::string_view text = trim(spec);
  if (text == "reciprocal") return {builtin_reciprocal(), true};

  std::optional<Expression> f, df;
  std::optional<double> end;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto semi = rest.find(';');
    std::string_view item = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument(
          fmt::format("curve '{}': expected 'reciprocal' or 'f=...; df=...'", spec));
    std::string_view key = trim(item.substr(0, eq));
    std::string_view value = trim(item.substr(eq + 1));
    try {
      if (key == "f") {
        f = parse_expression(value);
      } else if (key == "df") {
        df = parse_expression(value);
      } else if (key == "end") {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size())
          throw std::invalid_argument(fmt::format("curve end '{}' is not a number", value));
        end = v;
      } else {
        throw std::invalid_argument(fmt::format("unknown curve key '{}'", key));
      }
    } catch (const ParseError& e) {
      throw std::invalid_argument(fmt::format("{} = '{}': {}", key, value, e.what()));
    }
  }
  if (!f || !df) throw std::invalid_argument("expression curves need both f=... and df=...");

  Curve curve;
  curve.f = *f;
  curve.df = *df;
  curve.domain_start = start_x;
  if (end) {
    if (!(*end > start_x)) throw std::invalid_argument("curve end must exceed start");
    curve.domain_end = *end;
  }
  curve.name = fmt::format("f={}; df={}", f->to_string(), df->to_string());
  return {std::move(curve), end.has_value()};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto [curve, explicit_domain] = stage("config", [&] {
      check_config(config);
      return make_curve(config.curve, config.start_x);
    });
    PageSpec page = stage("config", [&] { return PageSpec::parse(config.page); });

    auto require = [](const ValidationResult& r) {
      if (!r) throw std::domain_error(r.message());
    };
    if (explicit_domain) stage("curve validation", [&] { require(validate(curve, kValidationSamples)); });

    BandPlan plan = stage("solve", [&] {
      return plan_bands(curve, config.start_x, config.band_spacing, config.count);
    });

    // Upper end of the region known to satisfy the curve conditions.
    double checked_to = curve.effective_end();
    if (!explicit_domain) {
      checked_to = plan.tangent_points.back();
      stage("curve validation", [&] {
        if (plan.count == 1) {
          double x = plan.start_x;
          require(validate_at(curve, std::span<const double>(&x, 1)));
        } else {
          require(validate_range(curve, plan.start_x, checked_to, kValidationSamples));
        }
      });
    }

    std::vector<double> truncations;
    for (double T : kDefaultTruncations)
      if (T > config.start_x && (is_builtin_reciprocal(curve) || T <= checked_to))
        truncations.push_back(T);
    auto paradox = stage("report", [&] { return paradox_ladder(curve, config.start_x, truncations); });
    ReportFiles report = render_report(plan, paradox);

    std::vector<std::string> pages;
    PageLayout pagination;
    if (!config.report_only) {
      TemplateOptions options;
      options.color_mode = config.color_mode;
      options.tabs = config.tabs;
      auto templates = stage("templates", [&] {
        return make_templates(plan, config.scale_mm_per_unit, options, config.overhang);
      });
      pagination = stage("layout", [&] { return layout(templates, page); });
      pages = emit_svg(pagination);
    }

    stage("I/O", [&] {
      namespace fs = std::filesystem;
      fs::create_directories(config.outdir);
      // Pages left over from an earlier, longer run would mix two template sets.
      static const std::regex page_name(R"(page_[0-9]+\.svg)");
      for (const auto& entry : fs::directory_iterator(config.outdir))
        if (entry.is_regular_file() && std::regex_match(entry.path().filename().string(), page_name))
          fs::remove(entry.path());

      for (std::size_t k = 0; k < pages.size(); ++k) {
        fs::path path = config.outdir / fmt::format("page_{}.svg", k + 1);
        write_file(path, pages[k]);
        out << fmt::format("wrote {} ({} templates)\n", path.string(),
                           pagination.pages[k].items.size());
      }
      const std::pair<const char*, const std::string*> files[] = {
          {"bands.csv", &report.bands}, {"paradox.csv", &report.paradox}, {"notes.txt", &report.notes}};
      for (const auto& [name, body] : files) {
        fs::path path = config.outdir / name;
        write_file(path, *body);
        out << fmt::format("wrote {}\n", path.string());
      }
    });
    return 0;
  } catch (const std::exception& e) {
    err << "paperhorn: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace paperhorn
