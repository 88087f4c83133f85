/**
 * Compact oriented surfaces as lists of components (genus, boundary count).
 */
#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace monodromy {

struct SurfaceComponent {
    long genus = 0;
    long boundary = 0;

    long euler() const { return 2 - 2 * genus - boundary; }
    /** First Betti number of the component. */
    long b1() const { return boundary > 0 ? 2 * genus + boundary - 1 : 2 * genus; }
    bool operator==(const SurfaceComponent& o) const {
        return genus == o.genus && boundary == o.boundary;
    }
    bool operator<(const SurfaceComponent& o) const {
        if (genus != o.genus) return genus < o.genus;
        return boundary < o.boundary;
    }
};

struct Surface {
    std::vector<SurfaceComponent> components;

    long euler() const {
        long e = 0;
        for (const auto& c : components) e += c.euler();
        return e;
    }
    long b1() const {
        long b = 0;
        for (const auto& c : components) b += c.b1();
        return b;
    }
    long total_boundary() const {
        long b = 0;
        for (const auto& c : components) b += c.boundary;
        return b;
    }
    bool operator==(const Surface& o) const { return components == o.components; }

    /** Sorted-component form, for comparisons up to homeomorphism. */
    Surface sorted() const {
        Surface s = *this;
        std::sort(s.components.begin(), s.components.end());
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (i) os << " + ";
            os << "S_{" << components[i].genus << "," << components[i].boundary << "}";
        }
        if (components.empty()) os << "(empty)";
        return os.str();
    }
};

}  // namespace monodromy
