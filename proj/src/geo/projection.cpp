// Copyright 2026 The QUAV Planner Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "quav/geo/projection.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "quav/error.hpp"

namespace quav::geo {

namespace {

constexpr double kSemiMajor = 6378137.0;
constexpr double kFlattening = 1.0 / 298.257223563;
constexpr double kScale = 0.9996;
constexpr double kFalseEasting = 500000.0;
constexpr double kFalseNorthingSouth = 10000000.0;
constexpr double kDeg = std::numbers::pi / 180.0;

struct KruegerSeries {
    double e;                 // first eccentricity
    double rectifying_radius; // A
    std::array<double, 6> alpha;
    std::array<double, 6> beta;
};

KruegerSeries make_series() {
    const double f = kFlattening;
    const double n = f / (2.0 - f);
    const double n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n, n6 = n5 * n;

    KruegerSeries s{};
    s.e = std::sqrt(f * (2.0 - f));
    s.rectifying_radius =
        kSemiMajor / (1.0 + n) * (1.0 + n2 / 4.0 + n4 / 64.0 + n6 / 256.0);

    s.alpha = {
        n / 2.0 - 2.0 * n2 / 3.0 + 5.0 * n3 / 16.0 + 41.0 * n4 / 180.0 -
            127.0 * n5 / 288.0 + 7891.0 * n6 / 37800.0,
        13.0 * n2 / 48.0 - 3.0 * n3 / 5.0 + 557.0 * n4 / 1440.0 +
            281.0 * n5 / 630.0 - 1983433.0 * n6 / 1935360.0,
        61.0 * n3 / 240.0 - 103.0 * n4 / 140.0 + 15061.0 * n5 / 26880.0 +
            167603.0 * n6 / 181440.0,
        49561.0 * n4 / 161280.0 - 179.0 * n5 / 168.0 +
            6601661.0 * n6 / 7257600.0,
        34729.0 * n5 / 80640.0 - 3418889.0 * n6 / 1995840.0,
        212378941.0 * n6 / 319334400.0,
    };
    s.beta = {
        n / 2.0 - 2.0 * n2 / 3.0 + 37.0 * n3 / 96.0 - n4 / 360.0 -
            81.0 * n5 / 512.0 + 96199.0 * n6 / 604800.0,
        n2 / 48.0 + n3 / 15.0 - 437.0 * n4 / 1440.0 + 46.0 * n5 / 105.0 -
            1118711.0 * n6 / 3870720.0,
        17.0 * n3 / 480.0 - 37.0 * n4 / 840.0 - 209.0 * n5 / 4480.0 +
            5569.0 * n6 / 90720.0,
        4397.0 * n4 / 161280.0 - 11.0 * n5 / 504.0 -
            830251.0 * n6 / 7257600.0,
        4583.0 * n5 / 161280.0 - 108847.0 * n6 / 3991680.0,
        20648693.0 * n6 / 638668800.0,
    };
    return s;
}

const KruegerSeries &series() {
    static const KruegerSeries s = make_series();
    return s;
}

// tan of the conformal latitude from tan of the geodetic latitude.
double conformal_tan(double tau, double e) {
    const double sigma = std::sinh(e * std::atanh(e * tau / std::hypot(1.0, tau)));
    return tau * std::hypot(1.0, sigma) - sigma * std::hypot(1.0, tau);
}

// Newton inversion of conformal_tan.
double geodetic_tan(double tau_prime, double e) {
    const double e2m = 1.0 - e * e;
    double tau = tau_prime / e2m;
    for (int iter = 0; iter < 10; ++iter) {
        const double tp = conformal_tan(tau, e);
        const double dtau = (tau_prime - tp) / std::hypot(1.0, tp) *
                            (1.0 + e2m * tau * tau) /
                            (e2m * std::hypot(1.0, tau));
        tau += dtau;
        if (std::abs(dtau) < 1e-15 * std::max(1.0, std::abs(tau))) {
            break;
        }
    }
    return tau;
}

void check_zone(int zone) {
    if (zone < 1 || zone > 60) {
        throw Error(ErrorCode::OutOfBounds,
                    "UTM zone " + std::to_string(zone) + " outside 1..60");
    }
}

} // namespace

double central_meridian(int zone) {
    check_zone(zone);
    return -183.0 + 6.0 * zone;
}

int zone_for_longitude(double lon) {
    if (!std::isfinite(lon) || lon < -180.0 || lon > 180.0) {
        throw Error(ErrorCode::OutOfBounds, "longitude outside [-180, 180]");
    }
    const int zone = static_cast<int>(std::floor((lon + 180.0) / 6.0)) + 1;
    return zone > 60 ? 60 : zone;
}

UtmPoint project_to_utm(const GeoPoint &p, int zone, ProjectionWarning *warning) {
    return project_to_utm(p, zone, p.lat < 0.0 ? Hemisphere::South : Hemisphere::North,
                          warning);
}

UtmPoint project_to_utm(const GeoPoint &p, int zone, Hemisphere hemisphere,
                        ProjectionWarning *warning) {
    if (!std::isfinite(p.lat) || !std::isfinite(p.lon) || p.lat < -90.0 ||
        p.lat > 90.0 || p.lon < -180.0 || p.lon > 180.0) {
        throw Error(ErrorCode::OutOfBounds, "geodetic point out of range");
    }
    check_zone(zone);

    double dlon = p.lon - central_meridian(zone);
    // Wrap into (-180, 180] so zones near the antimeridian behave.
    dlon = std::remainder(dlon, 360.0);
    if (warning != nullptr) {
        *warning = std::abs(dlon) > 18.0 ? ProjectionWarning::ZoneMismatch
                                         : ProjectionWarning::None;
    }

    const KruegerSeries &s = series();
    const double lam = dlon * kDeg;

    double xi_p = 0.0;
    double eta_p = 0.0;
    if (std::abs(p.lat) == 90.0) {
        xi_p = std::copysign(std::numbers::pi / 2.0, p.lat);
    } else {
        const double tau_p = conformal_tan(std::tan(p.lat * kDeg), s.e);
        xi_p = std::atan2(tau_p, std::cos(lam));
        eta_p = std::asinh(std::sin(lam) / std::hypot(tau_p, std::cos(lam)));
    }

    double xi = xi_p;
    double eta = eta_p;
    for (int j = 1; j <= 6; ++j) {
        const double a = s.alpha[static_cast<std::size_t>(j - 1)];
        xi += a * std::sin(2.0 * j * xi_p) * std::cosh(2.0 * j * eta_p);
        eta += a * std::cos(2.0 * j * xi_p) * std::sinh(2.0 * j * eta_p);
    }

    UtmPoint out;
    out.zone = zone;
    out.hemisphere = hemisphere;
    out.easting = kFalseEasting + kScale * s.rectifying_radius * eta;
    out.northing = kScale * s.rectifying_radius * xi +
                   (hemisphere == Hemisphere::South ? kFalseNorthingSouth : 0.0);
    return out;
}

GeoPoint unproject_from_utm(const UtmPoint &p) {
    check_zone(p.zone);
    // Northing is measured from the hemisphere's origin; a fixed-hemisphere
    // frame may extend across the equator.
    const double false_northing =
        p.hemisphere == Hemisphere::South ? kFalseNorthingSouth : 0.0;
    if (!std::isfinite(p.easting) || !std::isfinite(p.northing) ||
        p.easting < 0.0 || p.easting > 1.0e6 ||
        std::abs(p.northing - false_northing) > 1.0e7) {
        throw Error(ErrorCode::OutOfBounds, "easting/northing out of range");
    }

    const KruegerSeries &s = series();
    const double k0a = kScale * s.rectifying_radius;
    const double xi = (p.northing - false_northing) / k0a;
    const double eta = (p.easting - kFalseEasting) / k0a;

    double xi_p = xi;
    double eta_p = eta;
    for (int j = 1; j <= 6; ++j) {
        const double b = s.beta[static_cast<std::size_t>(j - 1)];
        xi_p -= b * std::sin(2.0 * j * xi) * std::cosh(2.0 * j * eta);
        eta_p -= b * std::cos(2.0 * j * xi) * std::sinh(2.0 * j * eta);
    }

    const double sinh_eta = std::sinh(eta_p);
    const double cos_xi = std::cos(xi_p);
    const double tau_p = std::sin(xi_p) / std::hypot(sinh_eta, cos_xi);
    const double lam = std::atan2(sinh_eta, cos_xi);
    const double tau = geodetic_tan(tau_p, s.e);

    GeoPoint out;
    out.lat = std::atan(tau) / kDeg;
    out.lon = std::remainder(central_meridian(p.zone) + lam / kDeg, 360.0);
    return out;
}

} // namespace quav::geo
