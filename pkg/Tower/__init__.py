from .TowerContext import TowerContext
from .RelationSet import RelationSet, build_relations
from .TowerController import TowerController
