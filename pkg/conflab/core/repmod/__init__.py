from .families import (
    MODULE_FAMILIES,
    ModuleFamily,
    ModuleFamilySpec,
    build_module,
    get_module_family,
    module_cases,
)
from .module import (
    ConformalModule,
    act_on,
    check_module,
    jth_action,
    jth_actions,
    locality_bounds,
    locality_check,
)
from .submodules import (
    Candidate,
    ProbeResult,
    candidates,
    irreducibility_probe,
    is_proper,
    quotient_module,
    rank1_closure_test,
    submodule_closure,
)

__all__ = [
    "Candidate",
    "ConformalModule",
    "MODULE_FAMILIES",
    "ModuleFamily",
    "ModuleFamilySpec",
    "ProbeResult",
    "act_on",
    "build_module",
    "candidates",
    "check_module",
    "get_module_family",
    "irreducibility_probe",
    "is_proper",
    "jth_action",
    "jth_actions",
    "locality_bounds",
    "locality_check",
    "module_cases",
    "quotient_module",
    "rank1_closure_test",
    "submodule_closure",
]
