static int f_gold ( int n ) {
  int result = 35 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 1 ;
  }
  result = Math . abs ( result ) ;
  return result ;
}
