from families.generators import (
    FamilyKind,
    SymmetricFamilySpec,
    SymmetryReport,
    admissible_specs,
    generate_family,
    uniform_body,
    verify_strong_symmetry,
)
