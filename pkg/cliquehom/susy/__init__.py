"""
Supersymmetric fermion hard-core model on graphs.
"""

from cliquehom.susy.hardcore import (
    HardCoreModel, SusyReport, hardcore_hamiltonian_sector, homology_hamiltonian_sector,
    hopping_hamiltonian_sector, supercharge_block, susy_groundspace_dims, susy_report,
)

__all__ = [
    'HardCoreModel', 'SusyReport', 'hardcore_hamiltonian_sector', 'homology_hamiltonian_sector',
    'hopping_hamiltonian_sector', 'supercharge_block', 'susy_groundspace_dims', 'susy_report',
]
