#pragma once

#include "isodescent/curves.hpp"

namespace isodescent {

enum class IsogenyName { Phi, PhiHat, Varphi, VarphiHat, Eta, EtaHat };

struct IsogenyMap {
    IsogenyName name;
    CurveLabel domain, codomain;
    int degree;
};

IsogenyMap isogeny_info(IsogenyName n);
std::string isogeny_name(IsogenyName n);

// Degree 4, on the small models.
CurvePoint phi(const Family& f, const CurvePoint& p);      // E_small -> E'_small
CurvePoint phi_hat(const Family& f, const CurvePoint& p);  // E'_small -> E_small

// Degree 2, on the t-models: varphi: E_t -> E''_t, eta: E'_t -> E''_t, and duals.
CurvePoint varphi(const Family& f, const CurvePoint& p);
CurvePoint varphi_hat(const Family& f, const CurvePoint& p);
CurvePoint eta(const Family& f, const CurvePoint& p);
CurvePoint eta_hat(const Family& f, const CurvePoint& p);

CurvePoint apply(const Family& f, IsogenyName n, const CurvePoint& p);

struct PoleError : DomainError {
    using DomainError::DomainError;
};

Rational pairing_f(const Family& f, const CurvePoint& p);  // x^2 - y on E_small
Rational pairing_g(const Family& f, const CurvePoint& p);  // on E'_small, f o phi_hat = g^4

}  // namespace isodescent
