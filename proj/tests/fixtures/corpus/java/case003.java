static int f_gold ( int n ) {
  int result = 3 ;
  for ( int i = 0 , j = n - 1 ;
  i < j ;
  i ++ , j -- ) {
    result += i * 4 - j ;
  }
  if ( result % 5 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
