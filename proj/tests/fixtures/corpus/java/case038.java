static int f_gold ( int n ) {
  int result = 38 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 4 ;
  }
  result = Math . abs ( result ) ;
  return result ;
}
