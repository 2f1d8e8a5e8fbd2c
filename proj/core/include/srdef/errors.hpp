#pragma once

#include <stdexcept>
#include <string>

namespace srdef {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAFace : Error {
    explicit NotAFace(const std::string& what) : Error("NotAFace: " + what) {}
};

struct NotPure : Error {
    explicit NotPure(const std::string& what) : Error("NotPure: " + what) {}
};

struct FreshLabelClash : Error {
    explicit FreshLabelClash(const std::string& what) : Error("FreshLabelClash: " + what) {}
};

struct NotExchangeable : Error {
    explicit NotExchangeable(const std::string& what) : Error("NotExchangeable: " + what) {}
};

struct SizeLimit : Error {
    explicit SizeLimit(const std::string& what) : Error("SizeLimit: " + what) {}
};

struct InvalidSupportPair : Error {
    explicit InvalidSupportPair(const std::string& what) : Error("InvalidSupportPair: " + what) {}
};

struct PreconditionUnverified : Error {
    explicit PreconditionUnverified(const std::string& what)
        : Error("PreconditionUnverified: " + what) {}
};

struct NotCrossing : Error {
    explicit NotCrossing(const std::string& what) : Error("NotCrossing: " + what) {}
};

struct UnstarBlocked : Error {
    explicit UnstarBlocked(const std::string& what) : Error("UnstarBlocked: " + what) {}
};

struct EdgeMissing : Error {
    explicit EdgeMissing(const std::string& what) : Error("EdgeMissing: " + what) {}
};

struct InvalidPartition : Error {
    explicit InvalidPartition(const std::string& what) : Error("InvalidPartition: " + what) {}
};

struct RuleAmbiguous : Error {
    explicit RuleAmbiguous(const std::string& what) : Error("RuleAmbiguous: " + what) {}
};

struct CertificationFailed : Error {
    explicit CertificationFailed(const std::string& what)
        : Error("CertificationFailed: " + what) {}
};

struct Infeasible : Error {
    explicit Infeasible(const std::string& what) : Error("Infeasible: " + what) {}
};

struct TieDetected : Error {
    explicit TieDetected(const std::string& what) : Error("TieDetected: " + what) {}
};

struct CertFailed : Error {
    explicit CertFailed(const std::string& what) : Error("CertFailed: " + what) {}
};

struct BadSpecifier : Error {
    explicit BadSpecifier(const std::string& what) : Error("BadSpecifier: " + what) {}
};

}  // namespace srdef
