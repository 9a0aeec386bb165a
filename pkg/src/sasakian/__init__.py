"""Exact-arithmetic construction and verification of the homogeneous
3-Sasakian structure attached to each simple complex Lie algebra."""

from .chevalley import (ChevalleyBasis, CompactForm, StructureTable,
                        build_chevalley, compact_real_form, coroot_element)
from .datum import (ComplexDatum, Grading, build_complex_datum,
                    g2_short_root_probe, verify_module_iso, z_grading)
from .dynkin import (Diagram, IsotropyReport, classification_table, diagram,
                     extended_diagram, isotropy_report, report_for_type,
                     simple_roots_of_h)
from .errors import (InvalidLieTypeError, NotARootError, NotMaximalError,
                     SignConsistencyError, VerificationError)
from .roots import (LieType, Root, RootSystem, build_root_system,
                    cartan_number, highest_root, is_maximal, root_string)
from .tensors import (NomizuTable, ReductiveSplit, SasakiModel, build_model,
                      compact_split, curvature_checks, nomizu,
                      verify_sasaki_identities)

__all__ = [
    "ChevalleyBasis", "CompactForm", "ComplexDatum", "Diagram", "Grading",
    "InvalidLieTypeError", "IsotropyReport", "LieType", "NomizuTable",
    "NotARootError", "NotMaximalError", "ReductiveSplit", "Root", "RootSystem",
    "SasakiModel", "SignConsistencyError", "StructureTable", "VerificationError",
    "build_chevalley", "build_complex_datum", "build_model", "build_root_system",
    "cartan_number", "classification_table", "compact_real_form", "compact_split",
    "coroot_element", "curvature_checks", "diagram", "extended_diagram",
    "g2_short_root_probe", "highest_root", "is_maximal", "isotropy_report",
    "nomizu", "report_for_type", "root_string", "simple_roots_of_h",
    "verify_module_iso", "verify_sasaki_identities", "z_grading",
]

__version__ = "0.1.0"
