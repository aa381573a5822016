static int f_gold ( String str ) {
  int n = str . length ( ) ;
  int vowels = 0 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    char c = str . charAt ( i ) ;
    if ( c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' ) vowels ++ ;
  }
  return vowels ;
}
