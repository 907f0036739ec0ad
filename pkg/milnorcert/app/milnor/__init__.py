"""
Milnor fiber eigenspace pipeline - exact arithmetic from arrangement to dimension.

Stages
------
1. cyclo        - exact arithmetic in Q(zeta_N), roots-of-unity sums
2. arrangement  - reduced arrangements, rank-2 flats, families, file format, plane sections
3. projection   - pencil chart and generic projection centres
4. criteria     - dual (m)-graphs, T1/T2 checkers, replayable certificates
5. wiring       - braided wiring diagrams (exact real sweep, numerical tracker)
6. monodromy    - local and global monodromy matrices, invariant dimension
7. oracle       - Zariski-van Kampen presentation and Fox-calculus H^1
"""
from .arrangement import Arrangement, Flat2, Hyperplane, flat_census, is_essential, rank2_flats
from .certificates import Certificate, Status, Theorem
from .criteria import (
    AnalysisReport,
    analyze_all,
    check_theorem1,
    check_theorem2,
    components,
    dual_m_graph,
    removal_scan,
    verify_certificate,
)
from .cyclo import CycloNum, nonvanishing_guaranteed, parse_cyclo, sum_roots, zeta
from .families import Family, generate
from .formats import dump_arrangement, load_arrangement, parse_arrangement
from .monodromy import EigenRep, build_diagram, first_betti_number, invariant_dim, milnor_dim
from .oracle import Presentation, fox_h1, presentation_from_diagram
from .projection import pencil_chart, projection_genericity, random_point_on
from .section import generic_section
from .sweep import sweep_real
from .tracking import track_complex
from .wiring import BraidedWiringDiagram

__all__ = [
    "CycloNum",
    "zeta",
    "parse_cyclo",
    "sum_roots",
    "nonvanishing_guaranteed",
    "Arrangement",
    "Hyperplane",
    "Flat2",
    "rank2_flats",
    "flat_census",
    "is_essential",
    "Family",
    "generate",
    "parse_arrangement",
    "load_arrangement",
    "dump_arrangement",
    "generic_section",
    "pencil_chart",
    "projection_genericity",
    "random_point_on",
    "Certificate",
    "Status",
    "Theorem",
    "AnalysisReport",
    "dual_m_graph",
    "components",
    "removal_scan",
    "check_theorem1",
    "check_theorem2",
    "verify_certificate",
    "analyze_all",
    "BraidedWiringDiagram",
    "sweep_real",
    "track_complex",
    "EigenRep",
    "build_diagram",
    "invariant_dim",
    "milnor_dim",
    "first_betti_number",
    "Presentation",
    "presentation_from_diagram",
    "fox_h1",
]
