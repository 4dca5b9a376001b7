from .cfg import *
from .insert import *
from .structure import *
