#include "mckay/components.hpp"

#include <sstream>

#include "mckay/errors.hpp"
#include "json.hpp"

namespace mckay {

std::vector<ComponentIndex> enumerate_components(const RootDatum& r, long long n,
                                                 long long budget) {
    if (n < 0) throw InvalidParameter("component size must be nonnegative");
    const int nv = r.num_vertices();
    std::vector<ComponentIndex> out;
    DimVec d(nv, 0);
    long long visited = 0;

    // Depth-first assignment in vertex order keeps the output lexicographic.
    auto rec = [&](auto&& self, int vertex, long long remaining) -> void {
        if (++visited > budget)
            throw BudgetExceeded("enumeration budget of " + std::to_string(budget) +
                                 " nodes exceeded");
        if (vertex == nv) {
            if (remaining != 0) return;
            long long wt = weight(d, r);
            if (wt < 0) return;
            out.push_back({d, n, wt, 2 * wt, std::nullopt});
            return;
        }
        long long cap = remaining / r.delta[vertex];
        for (long long c = 0; c <= cap; ++c) {
            d[vertex] = c;
            self(self, vertex + 1, remaining - c * r.delta[vertex]);
        }
        d[vertex] = 0;
    };
    rec(rec, 0, n);
    return out;
}

long long component_count(const RootDatum& r, long long n, long long budget) {
    return (long long)enumerate_components(r, n, budget).size();
}

std::string component_report(const RootDatum& r, long long n, const std::string& format,
                             long long budget, const std::string& group_label) {
    auto comps = enumerate_components(r, n, budget);
    if (format == "csv") {
        std::ostringstream os;
        os << "d,weight,dim\n";
        for (const auto& c : comps) {
            os << "\"";
            for (size_t i = 0; i < c.d.size(); ++i) os << (i ? "," : "") << c.d[i];
            os << "\"," << c.wt << "," << c.dim << "\n";
        }
        return os.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["group"] = group_label;
        j["n"] = n;
        j["type"] = r.type_label();
        j["count"] = comps.size();
        j["components"] = nlohmann::json::array();
        for (const auto& c : comps) {
            nlohmann::json e;
            e["d"] = c.d;
            e["weight"] = c.wt;
            e["dim"] = c.dim;
            j["components"].push_back(e);
        }
        return j.dump(2) + "\n";
    }
    throw UnsupportedFormat("component report format '" + format + "'");
}

} // namespace mckay
