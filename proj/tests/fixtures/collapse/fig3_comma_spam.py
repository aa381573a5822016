def ','','','','','','','','','','','','...
