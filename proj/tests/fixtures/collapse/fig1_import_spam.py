def import ( ):
	import numpy , numpy , stream , numpy , array , numpy
	import numpy , tuple , tuple
	from numpy , tuple , tuple
	...
