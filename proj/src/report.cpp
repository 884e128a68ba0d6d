#include <rainbow/report.hpp>

#include <cstdio>
#include <sstream>

namespace rainbow {

bool BoundReport::passed() const
{
    if (!note.empty() && note.rfind("inconclusive", 0) != 0)
        return false;
    if (verified && !*verified)
        return false;
    if (bound && colours_used && !bound->admits(*colours_used))
        return false;
    return true;
}

namespace {

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

template <class T>
std::string optional_field(const std::optional<T> &v)
{
    return v ? std::to_string(*v) : std::string();
}

} // namespace

std::string csv_header()
{
    return "instance,family,params,algorithm,n,kappa,lambda,delta,girth,diameter,bound_num,bound_den,"
           "colours_used,verified,runtime_ms,seed,note";
}

std::string to_csv_row(const BoundReport &r)
{
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", r.runtime_ms);
    std::ostringstream out;
    out << csv_field(r.instance) << ',' << csv_field(r.family) << ',' << csv_field(r.params) << ','
        << csv_field(r.algorithm) << ',' << r.n << ',' << r.kappa << ',' << r.lambda << ',' << r.delta << ','
        << optional_field(r.girth) << ',' << r.diameter << ',' << (r.bound ? std::to_string(r.bound->num) : "")
        << ',' << (r.bound ? std::to_string(r.bound->den) : "") << ',' << optional_field(r.colours_used) << ','
        << (r.verified ? (*r.verified ? "true" : "false") : "") << ',' << runtime << ',' << r.seed << ','
        << csv_field(r.note);
    return out.str();
}

std::string to_csv(const std::vector<BoundReport> &reports)
{
    std::string out = csv_header() + "\n";
    for (const auto &r : reports)
        out += to_csv_row(r) + "\n";
    return out;
}

nlohmann::json to_json(const BoundReport &r)
{
    using nlohmann::json;
    auto opt = [](const auto &v) -> json {
        if (v)
            return *v;
        return nullptr;
    };
    json j = {{"instance", r.instance},
              {"family", r.family},
              {"params", r.params},
              {"algorithm", r.algorithm},
              {"n", r.n},
              {"kappa", r.kappa},
              {"lambda", r.lambda},
              {"delta", r.delta},
              {"girth", opt(r.girth)},
              {"diameter", r.diameter},
              {"bound_num", r.bound ? json(r.bound->num) : json(nullptr)},
              {"bound_den", r.bound ? json(r.bound->den) : json(nullptr)},
              {"colours_used", opt(r.colours_used)},
              {"verified", opt(r.verified)},
              {"runtime_ms", r.runtime_ms},
              {"seed", r.seed},
              {"note", r.note},
              {"passed", r.passed()}};
    if (r.colours_used && r.kappa > 0)
        j["excess_over_n_per_kappa"] = *r.colours_used - static_cast<double>(r.n) / r.kappa;
    return j;
}

nlohmann::json to_json(const std::vector<BoundReport> &reports)
{
    auto out = nlohmann::json::array();
    for (const auto &r : reports)
        out.push_back(to_json(r));
    return out;
}

} // namespace rainbow
