"""
Metallic cubes Π^a_n
Construction, enumeration, structure, metrics and Hamiltonicity of the
graphs on words over {0, ..., a} in which letter a only follows a 0
"""

from .graph import MetallicCube, build
from .pipeline import VerificationPipeline, run_verification
from .strings import MetallicString, enumerate_strings

__version__ = "1.0.0"
__all__ = [
    'MetallicCube',
    'MetallicString',
    'VerificationPipeline',
    'build',
    'enumerate_strings',
    'run_verification',
]
